import random
from itertools import product

import pytest

from weilcensus.twists import (
    DihedralDatum,
    InconsistentDatum,
    InvolutionModule,
    commutator_subgroup,
    compute_e,
    consistent_m_order,
    count_dihedral_ell_adic,
    count_dihedral_mod_ell,
    lift_fiber_size,
    oracle_count,
    random_datum,
    random_involution_module,
    subgroup_image,
    subgroup_span,
)

Z5_INV = InvolutionModule((5,), ((-1,),))
Z9_INV = InvolutionModule((9,), ((-1,),))
Z4_INV = InvolutionModule((4,), ((-1,),))


def test_involution_module_validation():
    with pytest.raises(ValueError, match="chain"):
        InvolutionModule((4, 2), ((1, 0), (0, 1)))
    with pytest.raises(ValueError, match=">= 2"):
        InvolutionModule((1,), ((1,),))
    with pytest.raises(ValueError, match="identity"):
        InvolutionModule((5,), ((2,),))   # 2^2 = 4 != 1 mod 5
    with pytest.raises(ValueError, match="relation lattice"):
        InvolutionModule((2, 4), ((1, 0), (1, -1)))  # e_1 -> e_1 + e_2 breaks 2e_1 = 0
    # a legitimate shear: e_2 -> 2 e_1 - e_2 on Z/2 x Z/4
    m = InvolutionModule((2, 4), ((1, 1), (0, -1)))
    assert m.order == 8


def test_subgroup_image_examples():
    assert subgroup_image(Z5_INV, ((-2,),)).order == 5
    assert subgroup_image(InvolutionModule((4,), ((1,),)), ((0,),)).order == 1
    m = InvolutionModule((2, 4), ((1, 0), (0, -1)))
    image = subgroup_image(m, ((0, 0), (0, -2)))
    assert image.order == 2


def test_compute_e_examples():
    assert compute_e(Z5_INV) == 1
    assert compute_e(Z4_INV, ((1,),)) == 2
    with pytest.raises(InconsistentDatum):
        # the subgroup must contain [c, M']
        compute_e(Z4_INV, ((0,),))
    with pytest.raises(InconsistentDatum):
        # (1, 0) is fixed by c, so it is not in the (-1)-eigenpart
        compute_e(InvolutionModule((2, 4), ((1, 0), (0, -1))), ((1, 0),))


def test_chain_inclusions_on_random_modules():
    rng = random.Random(31)

    def closure(module, gens):
        seen = {module.reduce((0,) * module.k)}
        frontier = [module.reduce(g) for g in gens]
        while frontier:
            g = frontier.pop()
            new = set()
            for s in seen:
                t = module.reduce([a + b for a, b in zip(s, g)])
                if t not in seen:
                    new.add(t)
            seen |= new
            frontier.extend(new)
        return seen

    for _ in range(40):
        module = random_involution_module(rng, max_factor=8, max_k=3)
        if module.order > 4000:
            continue
        k = module.k
        cm1 = module.minus_one_action()
        minus_part = [
            v for v in module.elements()
            if all(
                (sum(module.c_action[i][j] * v[j] for j in range(k)) + v[i])
                % module.invariant_factors[i] == 0
                for i in range(k)
            )
        ]
        comm = closure(module, [tuple(cm1[i][j] for i in range(k)) for j in range(k)])
        two_minus = closure(module, [module.reduce([2 * x for x in v]) for v in minus_part])
        comm_minus = closure(
            module,
            [module.apply(cm1, v) for v in minus_part],
        )
        minus_set = set(minus_part)
        # 2 M'^- <= [c, M'^-] <= [c, M'] <= M'^-
        assert two_minus <= comm_minus <= comm <= minus_set
        assert len(comm) == commutator_subgroup(module).order


def test_count_examples():
    d5 = DihedralDatum(mprime=Z5_INV, m_order=2)
    assert count_dihedral_ell_adic(d5) == 2
    d9 = DihedralDatum(mprime=Z9_INV, m_order=2)
    assert count_dihedral_ell_adic(d9) == 4
    # c acting trivially leaves no stably irreducible classes
    mid = InvolutionModule((6,), ((1,),))
    did = DihedralDatum(mprime=mid, m_order=consistent_m_order(mid))
    assert count_dihedral_ell_adic(did) == 0
    # with the 2-torsion subgroup as comm, e = 2 and #M = #M'
    did2 = DihedralDatum(mprime=mid, m_order=6, comm_generators=((3,),))
    assert did2.e == 2
    assert count_dihedral_ell_adic(did2) == 0


def test_count_mod_ell_examples():
    d9 = DihedralDatum(mprime=Z9_INV, m_order=2)
    assert count_dihedral_mod_ell(d9, 3) == 0
    d5 = DihedralDatum(mprime=Z5_INV, m_order=2)
    assert count_dihedral_mod_ell(d5, 3) == 2
    d15 = DihedralDatum(mprime=InvolutionModule((15,), ((-1,),)), m_order=2)
    assert count_dihedral_mod_ell(d15, 3) == 2
    with pytest.raises(ValueError, match="ell = 2"):
        count_dihedral_mod_ell(d5, 2)


def test_count_rejects_inconsistent_data():
    with pytest.raises(InconsistentDatum):
        count_dihedral_ell_adic(DihedralDatum(mprime=Z5_INV, m_order=3))


def test_oracle_examples():
    assert oracle_count(DihedralDatum(mprime=Z5_INV, m_order=2)) == 2
    m33 = InvolutionModule((3, 3), ((-1, 0), (0, -1)))
    assert oracle_count(DihedralDatum(mprime=m33, m_order=consistent_m_order(m33))) == 4
    mid = InvolutionModule((7,), ((1,),))
    assert oracle_count(DihedralDatum(mprime=mid, m_order=consistent_m_order(mid))) == 0


def test_oracle_cap():
    big = InvolutionModule((2, 2), ((1, 0), (0, 1)))
    with pytest.raises(ValueError, match="cap"):
        oracle_count(DihedralDatum(mprime=big, m_order=8), cap=3)


def test_lift_fiber_size():
    d = DihedralDatum(mprime=Z5_INV, m_order=12)
    assert lift_fiber_size(d, 3) == 3
    assert lift_fiber_size(DihedralDatum(mprime=Z5_INV, m_order=2), 3) == 1
    assert lift_fiber_size(DihedralDatum(mprime=Z5_INV, m_order=27), 3) == 27


def test_lift_counts_do_not_factor_through_fibers():
    # an ell-adic count differing from fiber-size times the mod-ell count
    d9 = DihedralDatum(mprime=Z9_INV, m_order=2)
    adic = count_dihedral_ell_adic(d9)
    mod = count_dihedral_mod_ell(d9, 3)
    assert adic != lift_fiber_size(d9, 3) * mod


def test_formula_equals_oracle_on_random_data():
    rng = random.Random(32)
    checked = 0
    while checked < 150:
        datum = random_datum(rng)
        if datum.mprime.order > 10 ** 4:
            continue
        assert count_dihedral_ell_adic(datum) == oracle_count(datum)
        for ell in (3, 5):
            mod = count_dihedral_mod_ell(datum, ell)
            assert mod == oracle_count(datum, ell)
            assert mod <= count_dihedral_ell_adic(datum)
        checked += 1


def test_fixed_characters_counted_inside_oracle():
    # oracle asserts #Fix = #M'/#[c, M'] internally; a direct recount here
    for module in (Z5_INV, Z9_INV, Z4_INV, InvolutionModule((2, 4), ((1, 0), (0, -1)))):
        w = module.dual_action()
        ds = module.invariant_factors
        k = module.k
        fixed = sum(
            1
            for chi in product(*(range(d) for d in ds))
            if all(
                sum(w[j][i] * chi[i] for i in range(k)) % ds[j] == chi[j]
                for j in range(k)
            )
        )
        assert fixed == module.order // commutator_subgroup(module).order


def test_subgroup_span_and_containment():
    m = InvolutionModule((2, 8), ((1, 0), (0, -1)))
    whole = subgroup_span(m, ((1, 0), (0, 1)))
    sub = subgroup_span(m, ((0, 2),))
    assert whole.order == 16 and sub.order == 4
    assert whole.contains(sub) and not sub.contains(whole)
