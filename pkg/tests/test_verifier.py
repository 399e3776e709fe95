import pytest

from chordspec.families import complete, cycle, double_star, star, star_plus
from chordspec.graphs import (
    disjoint_union,
    graph6_decode,
    join,
    make_graph,
    mask_from_graph,
)
from chordspec.verifier import (
    DEFAULT_CLAIM_CAPS,
    Report,
    VerifierError,
    build_claim_probe,
    classify_component,
    enumerate_graphs,
    property_suite,
    replay_counterexample,
    report_diff,
    verify_appendix,
    verify_corollary,
    verify_theorem_main,
)


def test_enumerate_counts():
    for n in (1, 2, 3, 4, 5):
        assert sum(1 for _ in enumerate_graphs(n)) == 1 << (n * (n - 1) // 2)
    assert sum(1 for _ in enumerate_graphs(3, no_isolated=True)) == 4
    assert sum(1 for _ in enumerate_graphs(4, min_edges=5)) == 7  # C(6,5) + C(6,6)
    assert sum(1 for _ in enumerate_graphs(4, max_edges=1)) == 7
    with pytest.raises(VerifierError):
        next(enumerate_graphs(9))


def test_enumerate_ascending_mask_order():
    masks = [mask_from_graph(g) for g in enumerate_graphs(4)]
    assert masks == sorted(masks) == list(range(64))


def test_report_json_roundtrip_and_diff():
    rep = verify_theorem_main(6)
    back = Report.from_json(rep.to_json())
    assert report_diff(rep, back) == []
    other = verify_theorem_main(6, threshold_offset=-0.5)
    diffs = report_diff(rep, other)
    assert diffs and any("counterexamples" in d for d in diffs)


def test_theorem_n6_fixture():
    rep = verify_theorem_main(6)
    assert rep.passed
    assert rep.extremal_hits == 30
    assert rep.counterexamples == []
    # labeled no-isolated graphs on 6 vertices by inclusion-exclusion:
    # sum_k (-1)^k C(6,k) 2^C(6-k,2) = 32768-6144+960-160+30-6+1
    assert rep.graphs_examined == 27449


def test_theorem_deterministic_modulo_wall_time():
    a = verify_theorem_main(6).to_json_dict()
    b = verify_theorem_main(6).to_json_dict()
    a.pop("wall_time_ms")
    b.pop("wall_time_ms")
    assert a == b


def test_theorem_mutation_flips_to_fail():
    rep = verify_theorem_main(6, threshold_offset=-0.5)
    assert not rep.passed
    assert rep.counterexamples
    for g6 in rep.counterexamples:
        assert replay_counterexample("theorem", g6, {"threshold_offset": -0.5})
        # each recorded counterexample is a real graph without the config
        g = graph6_decode(g6)
        assert g.n == 6 and g.min_degree >= 1


def test_theorem_rejects_bad_order():
    with pytest.raises(VerifierError):
        verify_theorem_main(9)
    with pytest.raises(VerifierError):
        verify_corollary(6)


def test_classify_component_catalog():
    g = star(4)
    assert classify_component(g, tuple(range(5)))["kind"] == "star"
    ds = double_star(2, 3)
    info = classify_component(ds, tuple(range(7)))
    assert info["kind"] == "double_star" and info["total_leaves"] == 5
    sp = star_plus(4)
    info = classify_component(sp, tuple(range(5)))
    assert info["kind"] == "star_plus" and info["s"] == 4
    assert set(info["pair"]) == {1, 2}
    assert classify_component(complete(3), (0, 1, 2))["kind"] == "star_plus"
    assert classify_component(cycle(4), (0, 1, 2, 3))["kind"] == "c4"
    from chordspec.families import c4_plus

    assert classify_component(c4_plus(), (0, 1, 2, 3))["kind"] == "c4_plus"
    assert classify_component(complete(4), (0, 1, 2, 3))["kind"] == "k4"
    # outside the catalog: paths on five vertices, cycles on five vertices
    from chordspec.families import path

    assert classify_component(path(5), tuple(range(5))) is None
    assert classify_component(cycle(5), tuple(range(5))) is None
    bull = make_graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)])
    assert classify_component(bull, tuple(range(5))) is None


def test_classify_component_keeps_labels():
    g = disjoint_union(make_graph(2), star_plus(3))
    info = classify_component(g, (2, 3, 4, 5))
    assert info["kind"] == "star_plus" and info["center"] == 2


def test_claim_probes_match_hand_analysis():
    # at-cap probes are configuration-free; one-past-cap probes are not
    from chordspec.chords import find_k_chords_at_apex

    for kind, cap in DEFAULT_CLAIM_CAPS.items():
        assert find_k_chords_at_apex(build_claim_probe(kind, cap), 3) is None
        assert find_k_chords_at_apex(build_claim_probe(kind, cap + 1), 3) is not None


def test_structural_claims_hold_on_threshold_graph():
    """All neighborhood caps hold on the threshold graph itself, vacuously at
    a universal apex (empty W) and substantively at low-degree apexes."""
    from chordspec.graphs import apex_partition
    from chordspec.verifier import _claim1_violation, _claim2_violation
    from chordspec.families import k11n2_plus

    g = k11n2_plus(7).graph
    saw_nonempty_w = False
    for z in range(g.n):
        part = apex_partition(g, z)
        if z in (0, 1):
            assert not part.W  # universal apex
        saw_nonempty_w |= bool(part.W)
        comps = []
        for comp in g.subgraph(part.Zplus).components() if part.Zplus else []:
            # relabel back to original vertex ids
            ordered = sorted(part.Zplus)
            comp = tuple(ordered[i] for i in comp)
            info = classify_component(g, comp)
            assert info is not None
            comps.append((comp, info))
        for w in part.W:
            for comp, info in comps:
                assert _claim1_violation(g, w, comp, info, DEFAULT_CLAIM_CAPS) is None
            assert _claim2_violation(g, w, comps, part.Z0) is None
    assert saw_nonempty_w


def test_property_suite_deterministic():
    a = property_suite(seed=7, trials=120).to_json_dict()
    b = property_suite(seed=7, trials=120).to_json_dict()
    a.pop("wall_time_ms")
    b.pop("wall_time_ms")
    assert a == b


def test_property_suite_passes_and_counts():
    rep = property_suite(seed=3, trials=150)
    assert rep.passed
    names = [d["name"] for d in rep.details]
    assert names == [
        "edge_monotonicity",
        "perron_shift",
        "equitable_quotient_fixtures",
        "eta_upper_bound",
        "longest_cycle_edge_bound",
        "edge_count_forces_configuration",
        "path_free_edge_bound",
        "threshold_family_lower_bound",
        "structural_claims",
        "claim_boundary_battery",
    ]


def test_property_suite_cap_mutation_flips():
    rep = property_suite(seed=3, trials=60, claim_caps={"k4": 2})
    assert not rep.passed
    battery = next(d for d in rep.details if d["name"] == "claim_boundary_battery")
    assert not battery["passed"]
    assert rep.params["claim_caps"]["k4"] == 2


def test_appendix_report_structure():
    rep = verify_appendix(7, 12)
    by_name = {d["name"]: d for d in rep.details}
    assert by_name["template_charpoly_identities"]["passed"]
    assert by_name["equitable_partitions"]["passed"]
    assert by_name["quotient_radius_matches_index"]["passed"]
    assert by_name["index_below_threshold_family"]["passed"]
    assert by_name["threshold_family_bound"]["passed"]
    assert by_name["fan_width_monotone_chain_g12"]["passed"]
    with pytest.raises(VerifierError):
        verify_appendix(6, 12)
    with pytest.raises(VerifierError):
        verify_appendix(7, 31)


def test_appendix_flags_the_false_g18_chain():
    """The hub-star-pack fan-width chain is genuinely non-monotone for small
    fan width (first violation at order 19); the report must say so instead
    of going vacuously green."""
    rep = verify_appendix(7, 21)
    chain = next(
        d for d in rep.details if d["name"] == "fan_width_monotone_chain_g18"
    )
    assert not chain["passed"]
    assert [19, 3] in chain["violations"]
    assert [21, 3, "graphs"] in chain["violations"]
    # below the first violating order the chain holds and the report passes
    clean = verify_appendix(7, 18)
    chain_small = next(
        d for d in clean.details if d["name"] == "fan_width_monotone_chain_g18"
    )
    assert chain_small["passed"]
    assert clean.passed


def test_corollary_n7_counts_extremal_exception():
    rep = verify_corollary(7)
    assert rep.passed
    assert rep.extremal_hits == 210


def test_corollary_min_chords_4_still_passes():
    # computed outcome: every order-7 graph strictly above the threshold
    # carries a cycle with four chords, so the stricter run stays green
    rep = verify_corollary(7, min_chords=4)
    assert rep.passed
    assert rep.extremal_hits == 210


def test_jobs_parallel_matches_serial():
    a = verify_theorem_main(6).to_json_dict()
    b = verify_theorem_main(6, jobs=2).to_json_dict()
    a.pop("wall_time_ms")
    b.pop("wall_time_ms")
    assert a == b
