"""Skein modules of noncrossing matchings and set partitions."""

from ._core import (
    DiagramRing,
    DomainError,
    EdgeMonomial,
    Matching,
    MatchingVector,
    ParseError,
    PartitionVector,
    Permutation,
    RingElement,
    SetPartition,
    SizeLimitError,
    SkeinError,
    act_signed,
    character_table_csv,
    embed_f,
    enumerate_matchings,
    enumerate_ncm,
    enumerate_ncp,
    enumerate_set_partitions,
    hook_dim,
    mn_character,
    motzkin_numbers,
    project_matching,
    project_partition,
    riordan_numbers,
    skein_act_ncm,
    skein_act_ncp,
    uncrossing_word,
    verify,
    verify_suites,
)

__version__ = "0.1.0"
