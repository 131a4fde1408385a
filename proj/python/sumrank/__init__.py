"""Linearized Reed-Solomon codes in the sum-rank metric."""

from ._sumrank import Code, Field, corrupt, decode, lift_channel_decode, run_cli

__all__ = ["Code", "Field", "corrupt", "decode", "lift_channel_decode", "run_cli"]
