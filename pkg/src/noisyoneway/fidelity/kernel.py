"""
The answer kernel ``A_{r,k,l} = <T_r| L(|A_k><A_l|) |T_r>`` and the stacks it is built from.

``L`` is the product of the channels on the output vertices and ``T_r = BP_r |A_ref>`` the
target of outcome ``r``. The kernel is never stored densely: with ``G_m[r, k] = <T_r|K_m|A_k>``
for every product Kraus operator ``K_m``, ``A_{r,k,l} = sum_m G_m[r,k] conj(G_m[r,l])``.
"""

import logging
import numpy as np

from typing import List, Mapping, Optional, Sequence

from ..channels import ChannelLike, QubitChannel, channel_map
from ..pattern import AnswerSet, MeasurementPattern, byproduct_unitary, ideal_answers, reference_answer

logger = logging.getLogger(__name__)

_IDENTITY = [np.eye(2, dtype = complex)]


def _rows_apply(stack: np.ndarray, op: np.ndarray, position: int, n: int) -> np.ndarray:
    """Apply a 2x2 operator to qubit ``position`` of every row of a stack of vectors."""
    rows = stack.shape[0]
    reshaped = stack.reshape(rows, 2 ** position, 2, 2 ** (n - position - 1))
    return np.einsum("ab,ribj->riaj", op, reshaped).reshape(stack.shape)


def kraus_images(stack: np.ndarray, channels: Sequence[Optional[QubitChannel]]) -> List[np.ndarray]:
    """
    ``K_m |v>`` for every row ``v`` and every product Kraus operator of the per-qubit channels.
    """
    n = len(channels)
    images = [np.asarray(stack, dtype = complex)]
    for position, channel in enumerate(channels):
        ops = _IDENTITY if channel is None or getattr(channel, "is_identity", False) else channel.kraus()
        images = [_rows_apply(image, op, position, n) for image in images for op in ops]
    return images


def targets(answers: AnswerSet, target: Optional[np.ndarray] = None) -> np.ndarray:
    """``T_r = BP_r |A_ref>`` stacked row-wise over outcome labels."""
    pat = answers.pattern
    reference = reference_answer(answers) if target is None else np.asarray(target, dtype = complex)
    return np.array([byproduct_unitary(pat, outcome) @ reference for outcome in answers])


def target_for(pat: MeasurementPattern, reference: np.ndarray, outcome: Sequence[int]) -> np.ndarray:
    return byproduct_unitary(pat, outcome) @ reference


class AnswerKernel:
    """
    Lazily evaluated kernel over ``(r, k, l)``.

    Attributes:
        gram_stacks (np.ndarray): ``G[m, r, k] = <T_r|K_m|A_k>``, shape (n_kraus, R, K).
    """

    def __init__(self, gram_stacks: np.ndarray):
        self.gram_stacks = gram_stacks

    @classmethod
    def build(
            cls,
            answers: AnswerSet,
            answer_channels: Mapping[int, Optional[QubitChannel]],
            target: Optional[np.ndarray] = None,
            rows: Optional[Sequence[int]] = None
    ) -> "AnswerKernel":
        """
        Args:
            answers (AnswerSet): Ideal branches of the pattern.
            answer_channels (Mapping[int, QubitChannel]): Channel per output vertex.
            target (np.ndarray, optional): Reference answer; defaults to ``reference_answer``.
            rows (Sequence[int], optional): Only these outcome labels ``r``.
        """
        pat = answers.pattern
        states = answers.states
        channels = [answer_channels.get(q) for q in pat.outputs]

        t = targets(answers, target)
        if rows is not None:
            t = t[list(rows)]

        images = kraus_images(states, channels)
        gram = np.array([t.conj() @ image.T for image in images])
        logger.debug("answer kernel: %d Kraus products, %s gram shape", len(images), gram.shape[1:])
        return cls(gram)

    @property
    def shape(self):
        _, rows, cols = self.gram_stacks.shape
        return rows, cols, cols

    def __getitem__(self, index) -> complex:
        r, k, l = index
        g = self.gram_stacks[:, r]
        return complex(np.sum(g[:, k] * g[:, l].conj()))

    def slice(self, r: int) -> np.ndarray:
        """``A_{r,k,l}`` as a (K, K) matrix."""
        g = self.gram_stacks[:, r]
        return np.einsum("mk,ml->kl", g, g.conj())

    def diagonal(self, r: int) -> np.ndarray:
        """``A_{r,k,k}``, real."""
        return np.sum(np.abs(self.gram_stacks[:, r]) ** 2, axis = 0)

    def dense(self) -> np.ndarray:
        return np.einsum("mrk,mrl->rkl", self.gram_stacks, self.gram_stacks.conj())


def answer_kernel(pat: MeasurementPattern, gs, answer_channels: ChannelLike = None) -> AnswerKernel:
    """Kernel for a pattern on a resource with per-output channels (identity when missing)."""
    answers = ideal_answers(gs, pat)
    return AnswerKernel.build(answers, channel_map(answer_channels, pat.outputs))

