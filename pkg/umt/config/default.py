"""
Default settings for the workbench.
i.e. default "implementation" of Settings.
"""

from .pgroup import PropertyGroup
from .props import *
from .settings import Settings

MODE_PATTERN = r"orbits|subsets|formulas(:\d+)?"


class LimitsProps(PropertyGroup):
    """
    Size caps. Everything here is exhaustive, so these keep runs at desk
    scale.
    """

    structure_universe: IntProp(
        name="Structure Universe",
        desc="Largest universe accepted by structure operations.",
        default=16,
        min=0,
        max=16,
    )

    aut_universe: IntProp(
        name="Automorphism Universe",
        desc="Largest universe for automorphism search and orbit oracles.",
        default=8,
        min=1,
        max=10,
    )

    formula_depth: IntProp(
        name="Formula Depth",
        desc="Largest depth accepted by formula enumeration.",
        default=4,
        min=0,
        max=6,
    )

    enum_bits: IntProp(
        name="Enumeration Bits",
        desc="Largest total number of tuple bits in exhaustive enumeration.",
        default=25,
        min=1,
        max=30,
    )

    miner_universe: IntProp(
        name="Miner Universe",
        desc="Largest universe for exhaustive structure enumeration.",
        default=5,
        min=0,
        max=6,
    )


class SchemesProps(PropertyGroup):
    """
    Default evaluation modes of the scheme checks.
    """

    uniformity_mode: StrProp(
        name="Uniformity Mode",
        desc="Mode used by uniformity checks when none is given.",
        default="orbits",
        pattern=MODE_PATTERN,
    )

    atomicity_mode: StrProp(
        name="Atomicity Mode",
        desc="Mode used by the Q, Q1 and F checks when none is given.",
        default="subsets",
        pattern=MODE_PATTERN,
    )


class MinerProps(PropertyGroup):
    """
    Exhaustive campaigns.
    """

    workers: IntProp(
        name="Workers",
        desc="Number of worker processes for enumeration chunks.",
        default=1,
        min=1,
    )

    chunk_bits: IntProp(
        name="Chunk Bits",
        desc="Each chunk covers 2**chunk_bits consecutive structure codes.",
        default=12,
        min=1,
        max=24,
    )

    seed: IntProp(
        name="Seed",
        desc="Seed for campaigns that sample.",
        default=0,
    )

    progress: BoolProp(
        name="Progress",
        desc="Show progress bars on stderr.",
        default=True,
    )


class DefaultSettings(Settings):
    _pgroups = {
        "limits": LimitsProps,
        "miner": MinerProps,
        "schemes": SchemesProps,
    }
