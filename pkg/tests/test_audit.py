import pytest

from fundom import (CapExceeded, ConeSystem, DirichletIneq, Perm, PermGroup,
                    RatVec, basis_vector, dirichlet_domain, effectiveness,
                    facet_elements_generate, fix_orthogonality_check, gdd,
                    irredundant_core, k_universal_vector, make_ineq,
                    min_generating_size, PerOrbitWeights, ssp,
                    verify_fundamental_domain)

from conftest import cyc, elem_abelian, cyclic_triples, sym


def test_verify_table_cone_c3():
    report = verify_fundamental_domain(cyc(3), ssp(cyc(3)), trials=1000, seed=0)
    assert report.coverage_failures == 0
    assert report.interior_collisions == 0
    assert report.binary_orbits_total == report.binary_orbits_covered == 4
    assert report.ok


def test_verify_flags_weak_system():
    weak = ConeSystem(3, [make_ineq(RatVec([1, 0, 0]), Perm.from_cycles(3, [[0, 1]]))])
    report = verify_fundamental_domain(sym(3), weak, trials=500, seed=0)
    assert not report.ok
    assert report.interior_collisions > 0


def test_verify_flags_uncovering_system():
    # x1 >= x2 and x2 >= x1 carve out a hyperplane slab: no coverage
    a = make_ineq(RatVec([1, 0, 0]), Perm.from_cycles(3, [[0, 1]]))
    b = make_ineq(RatVec([0, 1, 0]), Perm.from_cycles(3, [[0, 1]]))
    thin = ConeSystem(3, [a, b])
    report = verify_fundamental_domain(sym(3), thin, trials=200, seed=0)
    assert report.coverage_failures > 0
    assert not report.ok


def test_verify_gdd_cyclic_triples():
    G = cyclic_triples(6)
    report = verify_fundamental_domain(G, gdd(G, PerOrbitWeights(2)),
                                       trials=1000, seed=0)
    assert report.ok


def test_verify_sampled_mode_for_large_groups():
    G = sym(9)  # order 362880, enumerable; force the sampled path via a low cap
    report = verify_fundamental_domain(G, ssp(G), trials=50, seed=1,
                                       enum_cap=1000, binary_cap=9,
                                       sample_pool=256)
    assert not report.exhaustive
    assert report.coverage_trials == 0
    assert report.interior_collisions == 0
    assert report.binary_orbits_total == report.binary_orbits_covered == 10
    assert "sampled" in report.to_dict()["element_check"]


def test_effectiveness_cyclic_triples_table_cone():
    G = cyclic_triples(6)
    rep = effectiveness(G, ssp(G))
    assert rep.lambda_ == 4
    assert rep.witness_orbit_size == 9
    assert rep.witness_rep == (1, 1, 0, 1, 1, 0)
    assert len(rep.witness_members) == 4


def test_effectiveness_gdd_unique_reps():
    G = cyclic_triples(6)
    rep = effectiveness(G, gdd(G, PerOrbitWeights(2)))
    assert rep.lambda_ == 1
    assert all(count == 1 for count in rep.histogram)


def test_effectiveness_symmetric_group():
    G = sym(5)
    rep = effectiveness(G, ssp(G))
    assert rep.lambda_ == 1


def test_effectiveness_cap():
    with pytest.raises(CapExceeded):
        effectiveness(sym(4), ssp(sym(4)), n_cap=3)


def test_facet_elements_generate():
    G = sym(3)
    core = irredundant_core(ssp(G))
    assert facet_elements_generate(G, core)
    E = cyclic_triples(6)
    assert facet_elements_generate(E, irredundant_core(gdd(E, PerOrbitWeights(2))))
    # dropping an inequality loses a generator of one factor
    partial = ConeSystem(3, core.ineqs[:1])
    assert not facet_elements_generate(G, partial)


def test_min_generating_size():
    assert min_generating_size(elem_abelian(4)) == 2
    assert min_generating_size(elem_abelian(8)) == 4
    assert min_generating_size(cyc(3)) == 1
    assert min_generating_size(PermGroup(2, [])) == 0
    with pytest.raises(CapExceeded):
        min_generating_size(sym(6), cap=100)


def test_fix_orthogonality_check_flags_hand_built_violation():
    # gamma = e_1 with an element whose fixed space contains e_1
    g = Perm.from_cycles(3, [[1, 2]])
    bad = DirichletIneq(basis_vector(3, 0), g, basis_vector(3, 0))
    system = ConeSystem(3, [bad])
    assert not fix_orthogonality_check(system)
    good = make_ineq(RatVec([4, 2, 1]), Perm.from_cycles(3, [[1, 2]]))
    assert good.normal == (0, 1, -1)
    assert fix_orthogonality_check(ConeSystem(3, [good]))


def test_dirichlet_two_universal_unique_binary_reps():
    for G in (sym(4), cyc(5), elem_abelian(6), cyclic_triples(6)):
        system = dirichlet_domain(G, k_universal_vector(G.degree, 2))
        rep = effectiveness(G, system)
        assert rep.lambda_ == 1
