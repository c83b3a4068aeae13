import logging
import numpy as np

from functools import cached_property
from typing import List, Sequence

from ..exceptions import FidelityException
from ..pattern import reference_answer
from .base import FidelityEngine, FidelityReport
from .kernel import kraus_images, target_for

logger = logging.getLogger(__name__)


class NonAdaptiveFidelity(FidelityEngine):
    """
    Fidelity of a pattern without adaptations.

    Every measurement basis is fixed, so the noise on a measured qubit only swaps its two
    outcomes and ``F(r) Z_r = sum_k w_{r,k} P_k A_{r,k,k}`` with
    ``w_{r,k} = prod_i (1 - p_i)^{1 + k_i + r_i} p_i^{k_i + r_i}`` (exponents mod 2).

    When the output channels are Pauli channels, the swap probabilities do not depend on the
    outcome, the ideal branches are equiprobable and the by-products are affine, ``F(r)`` is
    the same for every ``r`` and only ``F(0)`` is evaluated.
    """

    max_measured = 20

    def _validate(self):
        super()._validate()
        if self.pattern.is_adaptive:
            raise FidelityException(
                error_code = "FID002",
                method = self.__class__.__name__,
                detail = list(self.pattern.adapted_qubits),
                suggestion = "Use AdaptiveFidelity for adaptive patterns."
            )

    # ------------------------------------
    #         Cached ingredients
    # ------------------------------------

    @cached_property
    def _mixing(self) -> np.ndarray:
        return self.mixing_table()

    @cached_property
    def _reference(self) -> np.ndarray:
        if self.target is not None:
            return np.asarray(self.target, dtype = complex)
        return reference_answer(self.answers)

    @cached_property
    def _images(self) -> List[np.ndarray]:
        channels = [self.answer_channels.get(q) for q in self.pattern.outputs]
        return kraus_images(self.answers.states, channels)

    def _swap_rows(self, r: Sequence[int]) -> np.ndarray:
        """``w_{r,k}`` over all ``k`` as a Kronecker product of per-qubit rows."""
        row = np.ones(1)
        for i, r_i in enumerate(r):
            p0, p1 = self._mixing[i]
            local = np.array([1 - p0, p1]) if r_i == 0 else np.array([p0, 1 - p1])
            row = np.kron(row, local)
        return row

    @property
    def shift_invariant(self) -> bool:
        """Whether ``F(r) = F(0)`` holds for every outcome."""
        probabilities = self.answers.probabilities
        uniform = np.max(np.abs(probabilities - 1 / probabilities.size)) < 1e-12
        symmetric = np.max(np.abs(self._mixing[:, 0] - self._mixing[:, 1])) < 1e-15
        pauli = all(c is None or c.is_pauli for c in self.answer_channels.values())
        return bool(uniform and symmetric and pauli and self.pattern.byproducts_affine)

    # ------------------------------------
    #             Evaluation
    # ------------------------------------

    def outcome_probabilities(self) -> np.ndarray:
        """``Z_r`` for every outcome label: the swap matrices applied to the ideal distribution."""
        M = self.pattern.M
        tensor = self.answers.probabilities.reshape([2] * M) if M else self.answers.probabilities
        for i in range(M):
            p0, p1 = self._mixing[i]
            swap = np.array([[1 - p0, p1], [p0, 1 - p1]])
            tensor = np.moveaxis(np.tensordot(swap, tensor, axes = ([1], [i])), 0, i)
        return np.asarray(tensor).reshape(-1)

    def numerator(self, r: Sequence[int]) -> float:
        """``F(r) Z_r``."""
        target = target_for(self.pattern, self._reference, r)
        diagonal = sum(np.abs(image @ target.conj()) ** 2 for image in self._images)
        weights = self._swap_rows(r) * self.answers.probabilities
        return float(np.dot(weights, diagonal))

    def fidelity_at(self, r: Sequence[int]) -> float:
        """Fidelity of a single outcome vector ``r``."""
        r = tuple(int(b) for b in r)
        z = self.outcome_probabilities()[self.pattern.outcome_index(r)]
        if z <= 1e-12:
            return float("nan")
        return self.numerator(r) / z

    def evaluate(self) -> FidelityReport:
        z_raw = self.outcome_probabilities()
        outcomes = list(self.answers)

        if self.shift_invariant:
            zero = tuple([0] * self.pattern.M)
            f0 = self.numerator(zero) / z_raw[0]
            logger.debug("shift-invariant pattern: F(r) = F(0) = %.12g", f0)
            numerators = f0 * z_raw
        else:
            if self.pattern.M > 12:
                logger.info("evaluating %d outcomes one by one", len(outcomes))
            numerators = np.array([self.numerator(r) for r in outcomes])

        return self._report(z_raw, numerators)


def fidelity_nonadaptive(pat, gs, measured_channels = None, answer_channels = None, target = None) -> FidelityReport:
    """
    Per-outcome probabilities and fidelities of a non-adaptive pattern under per-qubit noise.
    """
    return NonAdaptiveFidelity(pat, gs, measured_channels, answer_channels, target).prepare().evaluate()
