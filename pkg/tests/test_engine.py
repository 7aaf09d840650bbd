import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from deltasynth.engine import (
    CaseTag,
    MONOMIAL_WORD_MAX,
    _Workspace,
    _reduce_block_and_rows,
    _reduce_dense4,
    classify_pattern,
    phase_offset,
    reduction_round,
    solve_monomial,
    synthesize,
    verify_decomposition,
)
from deltasynth.errors import (
    ExponentOneError,
    ImpossibleBranchError,
    NonMonomialError,
    NotUnitaryError,
    PhaseAlignmentError,
    UnreachablePatternError,
    UnsupportedDimError,
)
from deltasynth.linalg import (
    ExactMatrix,
    apply_elementary,
    delta_exponent,
    h_op,
    is_unitary,
    omega_op,
    word_matrix,
    x_op,
)
from deltasynth.ring import (
    D_ONE,
    D_ZERO,
    DOmega,
    OMEGA_POWERS,
    ZW_DELTA,
    ZW_ONE,
    residue,
)
from helpers import H_EXACT, T_EXACT, alphabet, random_word_matrix


def unit_class(power):
    return residue(OMEGA_POWERS[power % 8], 3)


def replay(ops, m):
    for op in ops:
        m = apply_elementary(op, m)
    return m


def monomial(dim, perm, phases):
    rows = [[D_ZERO] * dim for _ in range(dim)]
    for c in range(dim):
        rows[perm[c]][c] = DOmega(OMEGA_POWERS[phases[c] % 8], 0)
    return ExactMatrix(rows)


NOT_UNITARY_2 = ExactMatrix([[D_ONE, D_ONE], [D_ZERO, D_ONE]])


class TestClassifyPattern:
    def test_dense_two(self):
        pat = classify_pattern([[1, 1], [1, 1]])
        assert pat.tag is CaseTag.DENSE_2

    def test_sparse_two_rejected(self):
        with pytest.raises(UnreachablePatternError):
            classify_pattern([[1, 0], [0, 1]])

    def test_block_three(self):
        pat = classify_pattern([[0, 1, 1], [0, 0, 0], [0, 1, 1]])
        assert pat.tag is CaseTag.BLOCK_3
        assert pat.row_perm == (0, 2, 1)
        assert pat.col_perm == (1, 2, 0)

    def test_three_cycle_rejected(self):
        with pytest.raises(UnreachablePatternError):
            classify_pattern([[1, 1, 0], [1, 0, 1], [0, 1, 1]])

    def test_single_block(self):
        pat = classify_pattern([
            [0, 0, 0, 0],
            [1, 0, 1, 0],
            [0, 0, 0, 0],
            [1, 0, 1, 0],
        ])
        assert pat.tag is CaseTag.SINGLE_BLOCK
        assert pat.row_perm == (1, 3, 0, 2)
        assert pat.col_perm == (0, 2, 1, 3)

    def test_full_rows(self):
        pat = classify_pattern([
            [1, 1, 1, 1],
            [0, 0, 0, 0],
            [0, 0, 0, 0],
            [1, 1, 1, 1],
        ])
        assert pat.tag is CaseTag.FULL_ROWS
        assert not pat.transposed
        assert pat.row_perm[:2] == (0, 3)

    def test_full_columns(self):
        pat = classify_pattern([
            [0, 1, 1, 0],
            [0, 1, 1, 0],
            [0, 1, 1, 0],
            [0, 1, 1, 0],
        ])
        assert pat.tag is CaseTag.FULL_ROWS
        assert pat.transposed
        assert pat.col_perm[:2] == (1, 2)

    def test_double_block(self):
        pat = classify_pattern([
            [1, 1, 0, 0],
            [0, 0, 1, 1],
            [1, 1, 0, 0],
            [0, 0, 1, 1],
        ])
        assert pat.tag is CaseTag.DOUBLE_BLOCK
        assert pat.row_perm == (0, 2, 1, 3)
        assert pat.col_perm == (0, 1, 2, 3)

    def test_crossed_blocks_rejected(self):
        with pytest.raises(UnreachablePatternError):
            classify_pattern([
                [1, 1, 0, 0],
                [0, 1, 1, 0],
                [0, 0, 1, 1],
                [1, 0, 0, 1],
            ])

    def test_block_and_rows(self):
        pat = classify_pattern([
            [0, 1, 0, 1],
            [0, 1, 0, 1],
            [1, 1, 1, 1],
            [1, 1, 1, 1],
        ])
        assert pat.tag is CaseTag.BLOCK_AND_ROWS
        assert pat.row_perm == (0, 1, 2, 3)
        assert pat.col_perm == (1, 3, 0, 2)

    def test_block_and_rows_misaligned_rejected(self):
        with pytest.raises(UnreachablePatternError):
            classify_pattern([
                [1, 1, 1, 1],
                [1, 1, 1, 1],
                [1, 1, 0, 0],
                [0, 0, 1, 1],
            ])

    def test_dense_four(self):
        pat = classify_pattern([[1] * 4 for _ in range(4)])
        assert pat.tag is CaseTag.DENSE_4

    def test_odd_weights_rejected(self):
        with pytest.raises(UnreachablePatternError):
            classify_pattern([
                [1, 1, 1, 0],
                [1, 1, 1, 0],
                [1, 1, 0, 1],
                [0, 0, 1, 1],
            ])

    def test_dimension_limits(self):
        with pytest.raises(UnsupportedDimError):
            classify_pattern([[1]])
        with pytest.raises(UnsupportedDimError):
            classify_pattern([[1] * 5 for _ in range(5)])
        with pytest.raises(ValueError):
            classify_pattern([[1, 1], [1, 1], [1, 1]])
        with pytest.raises(ValueError):
            classify_pattern([[2, 1], [1, 1]])


class TestPhaseOffset:
    def test_aligned_pair(self):
        row1 = [unit_class(0), unit_class(1)]
        row2 = [unit_class(2), unit_class(3)]
        assert phase_offset(row1, row2) == 2

    @given(st.lists(st.integers(min_value=0, max_value=7), min_size=1, max_size=4),
           st.integers(min_value=0, max_value=7))
    def test_shift_recovered(self, exps, shift):
        row1 = [unit_class(e) for e in exps]
        row2 = [unit_class(e + shift) for e in exps]
        assert phase_offset(row1, row2) == shift % 4

    def test_inconsistent_shift_rejected(self):
        row1 = [unit_class(0), unit_class(0)]
        row2 = [unit_class(2), unit_class(1)]
        with pytest.raises(PhaseAlignmentError):
            phase_offset(row1, row2)

    def test_non_unit_rejected(self):
        with pytest.raises(PhaseAlignmentError):
            phase_offset([residue(ZW_DELTA, 3)], [unit_class(0)])

    def test_wrong_modulus_rejected(self):
        with pytest.raises(PhaseAlignmentError):
            phase_offset([residue(ZW_ONE, 2)], [residue(ZW_ONE, 2)])

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            phase_offset([], [])
        with pytest.raises(ValueError):
            phase_offset([unit_class(0)], [unit_class(0), unit_class(1)])


class TestSolveMonomial:
    @pytest.mark.parametrize("dim", [1, 2, 3, 4])
    def test_identity_needs_nothing(self, dim):
        assert solve_monomial(ExactMatrix.identity(dim)) == []

    def test_every_two_dim_monomial(self):
        longest = 0
        for perm in itertools.permutations(range(2)):
            for phases in itertools.product(range(8), repeat=2):
                m = monomial(2, perm, phases)
                ops = solve_monomial(m)
                assert len(ops) <= MONOMIAL_WORD_MAX[2]
                assert replay(ops, m) == ExactMatrix.identity(2)
                longest = max(longest, len(ops))
        assert longest == MONOMIAL_WORD_MAX[2]

    @pytest.mark.parametrize("dim", [3, 4])
    def test_random_monomials(self, dim):
        rng = random.Random(97 * dim)
        for _ in range(200):
            perm = list(range(dim))
            rng.shuffle(perm)
            phases = [rng.randrange(8) for _ in range(dim)]
            m = monomial(dim, perm, phases)
            ops = solve_monomial(m)
            assert len(ops) <= MONOMIAL_WORD_MAX[dim]
            assert replay(ops, m) == ExactMatrix.identity(dim)

    def test_rejects_positive_exponent(self):
        with pytest.raises(NonMonomialError):
            solve_monomial(H_EXACT, unitary_checked=True)

    def test_rejects_dense_row(self):
        with pytest.raises(NonMonomialError):
            solve_monomial(NOT_UNITARY_2, unitary_checked=True)

    def test_rejects_non_unitary(self):
        with pytest.raises(NotUnitaryError):
            solve_monomial(NOT_UNITARY_2)


class TestReductionRound:
    def test_hadamard_in_one_step(self):
        rnd, out = reduction_round(H_EXACT)
        assert rnd.left_ops == (h_op(1, 2),)
        assert rnd.right_ops == ()
        assert (rnd.k_before, rnd.k_after) == (2, 0)
        assert rnd.case_chain == (CaseTag.DENSE_2.value,)
        assert out == ExactMatrix.identity(2)

    def test_exponent_one_rejected(self):
        forged = ExactMatrix([[DOmega(ZW_ONE, 1), D_ZERO], [D_ZERO, D_ONE]])
        with pytest.raises(ExponentOneError):
            reduction_round(forged, unitary_checked=True)

    def test_exponent_zero_rejected(self):
        with pytest.raises(ValueError):
            reduction_round(ExactMatrix.identity(2), unitary_checked=True)

    def test_stated_exponent_must_match(self):
        with pytest.raises(ValueError):
            reduction_round(H_EXACT, 4)

    def test_rejects_non_unitary(self):
        with pytest.raises(NotUnitaryError):
            reduction_round(NOT_UNITARY_2)

    @pytest.mark.parametrize("dim", [2, 3, 4])
    def test_progress_on_random_words(self, dim):
        done = 0
        for seed in range(40):
            m = random_word_matrix(dim, 40, 31 * seed + dim)
            k = delta_exponent(m)
            if k <= 1:
                continue
            rnd, out = reduction_round(m)
            assert rnd.k_before == k
            assert rnd.k_after < k
            assert rnd.k_after != 1
            assert rnd.hadamard_count <= 4
            assert delta_exponent(out) == rnd.k_after
            assert is_unitary(out)
            assert replay(rnd.left_ops + rnd.right_ops, m) == out
            done += 1
        assert done > 20


class TestSynthesize:
    @pytest.mark.parametrize("dim", [1, 2, 3, 4])
    def test_identity(self, dim):
        dec = synthesize(ExactMatrix.identity(dim))
        assert dec.word == ()
        assert dec.rounds == ()
        assert dec.source_k == 0
        assert verify_decomposition(ExactMatrix.identity(dim), dec)

    def test_phase_gate(self):
        assert synthesize(T_EXACT).word == (omega_op(2, 1),)

    def test_hadamard_gate(self):
        assert synthesize(H_EXACT).word == (h_op(1, 2),)

    def test_scalar(self):
        m = ExactMatrix([[DOmega(OMEGA_POWERS[3], 0)]])
        assert synthesize(m).word == (omega_op(1, 3),)

    def test_rejects_non_unitary(self):
        with pytest.raises(NotUnitaryError):
            synthesize(NOT_UNITARY_2)

    def test_deterministic(self):
        m = random_word_matrix(4, 50, 1234)
        assert synthesize(m) == synthesize(m)

    @pytest.mark.parametrize("dim", [1, 2, 3, 4])
    @pytest.mark.parametrize("length", [3, 20, 60])
    def test_random_round_trips(self, dim, length):
        for seed in range(8):
            m = random_word_matrix(dim, length, 17 * seed + length + dim)
            dec = synthesize(m, debug=True)
            assert verify_decomposition(m, dec)
            assert dec.source_k == delta_exponent(m)
            assert all(op.side == "L" for op in dec.word)
            k = dec.source_k
            for rnd in dec.rounds:
                assert rnd.k_before == k
                assert rnd.k_after < k
                assert 1 <= rnd.hadamard_count <= 4
                k = rnd.k_after
            assert k in (0, dec.source_k)
            assert k != 1

    def test_case_coverage(self):
        seen = set()
        for dim, length, seed in [(2, 12, 12), (3, 40, 40), (4, 12, 12),
                                  (4, 12, 19), (4, 40, 54), (4, 40, 145)]:
            dec = synthesize(random_word_matrix(dim, length, seed))
            for rnd in dec.rounds:
                seen.update(rnd.case_chain)
        assert seen == {tag.value for tag in CaseTag}

    def test_verify_rejects_mismatch(self):
        dec = synthesize(T_EXACT)
        assert not verify_decomposition(H_EXACT, dec)
        assert not verify_decomposition(ExactMatrix.identity(3), dec)


def forged(*rows):
    """Rows of residue-level entries: ints are unit powers at exponent 2,
    ("sub", e) marks a unit at exponent 1, whose scaled residue is delta w^e."""
    out = []
    for row in rows:
        cells = []
        for spec in row:
            if isinstance(spec, tuple):
                cells.append(DOmega(OMEGA_POWERS[spec[1] % 8], 1))
            else:
                cells.append(DOmega(OMEGA_POWERS[spec % 8], 2))
        out.append(cells)
    return ExactMatrix(out)


def run_dense4(m):
    ws = _Workspace(m, 2)
    _reduce_dense4(ws)
    return ws


class TestDenseFourBranches:
    """Forged residue layouts drive every branch of the dense dispatch.

    The matrices are not unitary; the branches that raise encode exactly the
    layouts unitarity forbids, and the Hadamard bookkeeping they exercise is
    algebraic, not spectral.
    """

    def test_uniform_differences(self):
        ws = run_dense4(forged((0, 0, 0, 0), (1, 1, 1, 1),
                               (0, 0, 0, 0), (0, 0, 0, 0)))
        assert ws.left_ops == [omega_op(1, 1), h_op(1, 2)]
        assert ws.right_ops == []

    def test_three_one_split_rejected(self):
        with pytest.raises(ImpossibleBranchError):
            run_dense4(forged((0, 0, 0, 0), (0, 0, 0, 1),
                              (0, 0, 0, 0), (0, 0, 0, 0)))

    def test_distinct_ascending(self):
        ws = run_dense4(forged((0, 0, 0, 0), (0, 1, 2, 3),
                               (0, 1, 2, 3), (0, 0, 0, 0)))
        assert ws.left_ops == [h_op(2, 3)]
        assert ws.right_ops == []

    def test_distinct_descending(self):
        ws = run_dense4(forged((0, 0, 0, 0), (0, 1, 2, 3),
                               (0, 3, 2, 1), (0, 0, 0, 0)))
        assert ws.left_ops == [h_op(2, 3)]

    def test_distinct_needs_column_sort(self):
        ws = run_dense4(forged((0, 0, 0, 0), (0, 2, 3, 1),
                               (0, 2, 3, 1), (0, 0, 0, 0)))
        assert ws.right_ops == [x_op(2, 4, side="R"), x_op(3, 4, side="R")]
        assert ws.left_ops == [h_op(2, 3)]

    @pytest.mark.parametrize("third", [(0, 1, 3, 2), (0, 2, 1, 3),
                                       (0, 2, 3, 1), (0, 3, 1, 2)])
    def test_distinct_bad_orderings_rejected(self, third):
        with pytest.raises(ImpossibleBranchError):
            run_dense4(forged((0, 0, 0, 0), (0, 1, 2, 3),
                              third, (0, 0, 0, 0)))

    @pytest.mark.parametrize("third,ops", [
        ((0, 0, 0, 0), [h_op(1, 3)]),
        ((0, 0, 2, 2), [h_op(1, 3)]),
        ((0, 2, 0, 2), [h_op(1, 3)]),
        ((0, 2, 2, 0), [h_op(1, 3)]),
        ((0, 1, 0, 1), [h_op(2, 3)]),
        ((0, 3, 0, 3), [h_op(2, 3)]),
    ])
    def test_distinct_paired_units(self, third, ops):
        ws = run_dense4(forged((0, 0, 0, 0), (0, 1, 2, 3),
                               third, (0, 0, 0, 0)))
        assert ws.left_ops == ops

    @pytest.mark.parametrize("third", [(0, 0, 1, 1), (0, 0, 3, 3),
                                       (0, 1, 1, 0), (0, 3, 3, 0),
                                       (0, 0, 1, 2)])
    def test_distinct_odd_pairs_rejected(self, third):
        with pytest.raises(ImpossibleBranchError):
            run_dense4(forged((0, 0, 0, 0), (0, 1, 2, 3),
                              third, (0, 0, 0, 0)))

    def test_pairs_even_gap(self):
        ws = run_dense4(forged((0, 0, 0, 0), (0, 0, 2, 2),
                               (0, 0, 0, 0), (0, 0, 0, 0)))
        assert ws.left_ops == [h_op(1, 2)]

    def test_pairs_needs_column_pairing(self):
        ws = run_dense4(forged((0, 0, 0, 0), (0, 2, 0, 2),
                               (0, 0, 0, 0), (0, 0, 0, 0)))
        assert ws.right_ops == [x_op(2, 3, side="R")]
        assert ws.left_ops == [h_op(1, 2)]

    @pytest.mark.parametrize("third,ops", [
        ((0, 0, 0, 0), [h_op(1, 3)]),
        ((0, 0, 2, 2), [h_op(1, 3)]),
        ((0, 0, 1, 1), [h_op(2, 3)]),
        ((0, 2, 1, 3), [h_op(2, 3)]),
        ((0, 2, 3, 1), [h_op(2, 3)]),
        ((0, 2, 2, 0), [h_op(1, 3)]),
        ((0, 2, 0, 2), [h_op(1, 3)]),
    ])
    def test_pairs_unit_gap(self, third, ops):
        ws = run_dense4(forged((0, 0, 0, 0), (0, 0, 1, 1),
                               third, (0, 0, 0, 0)))
        assert ws.left_ops == ops

    @pytest.mark.parametrize("third", [(0, 1, 2, 3), (0, 1, 3, 2),
                                       (0, 3, 1, 2), (0, 3, 2, 1),
                                       (0, 1, 0, 1), (0, 1, 1, 0),
                                       (0, 3, 0, 3), (0, 3, 3, 0),
                                       (0, 0, 1, 3)])
    def test_pairs_unit_gap_rejected(self, third):
        with pytest.raises(ImpossibleBranchError):
            run_dense4(forged((0, 0, 0, 0), (0, 0, 1, 1),
                              third, (0, 0, 0, 0)))

    def test_pairs_inverse_gap_shifts_columns(self):
        ws = run_dense4(forged((0, 0, 0, 0), (0, 0, 3, 3),
                               (0, 0, 0, 0), (0, 0, 0, 0)))
        assert ws.right_ops == [omega_op(3, 1, side="R"), omega_op(4, 1, side="R")]
        assert ws.left_ops == [h_op(1, 3)]


class TestBlockAndRowsBranches:
    def test_congruent_light_rows_drop(self):
        m = forged((0, 0, ("sub", 0), ("sub", 0)),
                   (0, 0, ("sub", 0), ("sub", 0)),
                   (0, 0, 0, 0),
                   (0, 0, 0, 0))
        ws = _Workspace(m, 2)
        _reduce_block_and_rows(ws, classify_pattern([[1, 1, 0, 0],
                                                     [1, 1, 0, 0],
                                                     [1, 1, 1, 1],
                                                     [1, 1, 1, 1]]))
        assert ws.left_ops == [h_op(1, 2)]

    def test_defective_light_rows_mix_full_rows(self):
        m = forged((0, 0, ("sub", 0), ("sub", 0)),
                   (0, 0, ("sub", 1), ("sub", 1)),
                   (0, 0, 0, 0),
                   (0, 0, 2, 2))
        ws = _Workspace(m, 2)
        _reduce_block_and_rows(ws, classify_pattern([[1, 1, 0, 0],
                                                     [1, 1, 0, 0],
                                                     [1, 1, 1, 1],
                                                     [1, 1, 1, 1]]))
        assert ws.left_ops == [h_op(3, 4)]
