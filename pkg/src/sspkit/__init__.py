"""sspkit: exact algebra, samplers, kernels and asymptotics for the
symplectic Schur process."""

__version__ = "0.1.0"
