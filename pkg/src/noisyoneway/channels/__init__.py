from .base import QubitChannel, ChannelLike, channel_map, apply_channels, kraus, apply_channel
from .general import NoiseChannel, MixingProbability, lambdas, mixing_probabilities
from .fixed_pole import FixedPoleMap, protected_basis, measurement_axis
from .parse import KINDS, channel_from_dict, channel_to_dict



__all__ = [
    "QubitChannel",
    "ChannelLike",
    "channel_map",
    "apply_channels",
    "kraus",
    "apply_channel",
    "NoiseChannel",
    "MixingProbability",
    "lambdas",
    "mixing_probabilities",
    "FixedPoleMap",
    "protected_basis",
    "measurement_axis",
    "KINDS",
    "channel_from_dict",
    "channel_to_dict"
]
