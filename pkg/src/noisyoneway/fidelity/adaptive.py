import logging
import numpy as np

from ..core import X, Z
from ..pattern import basis_array
from .base import FidelityEngine, FidelityReport
from .kernel import AnswerKernel

logger = logging.getLogger(__name__)


class AdaptiveFidelity(FidelityEngine):
    """
    Exact fidelity of a possibly adaptive pattern.

    With ``|G> = sum_k |b_k> sqrt(P_k) |A_k>`` over the (adapted) measurement bases, the state
    left by outcome ``r`` is ``sum_{k,l} c_{r,k,l} sqrt(P_k P_l) L(|A_k><A_l|)`` where, per
    measured qubit, the noise keeps the projection with weight ``1 - p`` and swaps it through
    the flip ``F`` (Z in the x-y plane, X on the z axis) with weight ``p``:

        c_i(k, l) = (1 - p_i) <b_r|b_k><b_l|b_r> + p_i <b_r|F|b_k><b_l|F|b_r>

    The cost grows as ``4**M`` per outcome, hence the limit on measured qubits.
    """

    max_measured = 8

    def _basis_tables(self):
        """
        Inner products between the four (s, k) basis states of every measured qubit.
        """
        tables = []
        for m in self.pattern.measurements:
            flip = Z if m.is_xy else X
            states = [basis_array(m.theta, m.alpha, s, k) for s in (0, 1) for k in (0, 1)]
            u = np.array([[np.vdot(a, b) for b in states] for a in states])
            v = np.array([[np.vdot(a, flip @ b) for b in states] for a in states])
            tables.append((u, v))
        return tables

    def evaluate(self) -> FidelityReport:
        answers = self.answers
        pat = self.pattern
        M = pat.M
        outcomes = list(answers)
        K = len(outcomes)

        weights = np.sqrt(answers.probabilities)
        states = answers.states * weights[:, None]
        overlaps = states.conj() @ states.T
        mixing = self.mixing_table()

        # codes[k, i] = 2 * s_i(k) + k_i
        bits = np.array(outcomes, dtype = int).reshape(K, M)
        adapt = np.array([pat.adaptations(o) for o in outcomes], dtype = int).reshape(K, M)
        codes = 2 * adapt + bits
        tables = self._basis_tables()

        kernel = AnswerKernel.build(answers, self.answer_channels, self.target)
        gram = kernel.gram_stacks * weights[None, None, :]

        logger.debug("adaptive fidelity: %d outcomes, %d Kraus products", K, gram.shape[0])

        numerators = np.zeros(K)
        z_raw = np.zeros(K)
        for r in range(K):
            c = np.ones((K, K), dtype = complex)
            for i, (u_table, v_table) in enumerate(tables):
                u = u_table[codes[r, i], codes[:, i]]
                v = v_table[codes[r, i], codes[:, i]]
                p = mixing[i, bits[:, i]]
                c *= ((1 - p) * u)[:, None] * u.conj()[None, :] + (p * v)[:, None] * v.conj()[None, :]

            g = gram[:, r, :]
            numerators[r] = float(np.real(np.einsum("mk,kl,ml->", g, c, g.conj())))
            z_raw[r] = float(np.real(np.sum(c * overlaps.T)))

        return self._report(z_raw, numerators)


def fidelity_adaptive(pat, gs, measured_channels = None, answer_channels = None, target = None) -> FidelityReport:
    """
    Per-outcome probabilities and fidelities of ``pat`` on ``gs`` under per-qubit noise.
    """
    return AdaptiveFidelity(pat, gs, measured_channels, answer_channels, target).prepare().evaluate()
