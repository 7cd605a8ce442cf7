"""Data-space dimension of a lifted Fresnel-zone phase retrieval operator.

Thin Python wrapper over the C++ core: closed-form bounds, radiation and
lifting operators, Slepian-Pollak spectra, and spectrum analysis.
"""

import os as _os


def _hint_openblas_coretype():
    # The extension's OpenBLAS selects kernels from CPUID when it loads; VMs
    # that mask the CPU model drop it to generic kernels. Hint a supported
    # core type before the import triggers that choice.
    if _os.environ.get("OPENBLAS_CORETYPE") or not _os.path.exists("/proc/cpuinfo"):
        return
    try:
        with open("/proc/cpuinfo") as fh:
            flags = ""
            for line in fh:
                if line.startswith("flags"):
                    flags = line
                    break
    except OSError:
        return
    if " avx512f" in flags and " avx512dq" in flags:
        _os.environ["OPENBLAS_CORETYPE"] = "SKYLAKEX"
    elif " avx2" in flags and " fma" in flags:
        _os.environ["OPENBLAS_CORETYPE"] = "HASWELL"


_hint_openblas_coretype()

from _liftdim import (  # noqa: F401,E402
    BoundResult,
    ComplexOperatorMatrix,
    ConfigError,
    Grid1D,
    LiftedDomainSample,
    LiftedPoint,
    NumericalError,
    OperatorKind,
    ProblemConfig,
    SlepianSpectrum,
    SpectrumKind,
    SpectrumResult,
    TensorGrid2D,
    apply_T,
    approx_kernel_H,
    assemble_A,
    assemble_A_adjoint,
    assemble_AAdag_approx,
    assemble_T,
    compose,
    compute_bounds,
    detect_critical_index,
    eig_spectrum,
    load_config,
    map_to_lifted,
    product_spectrum,
    run_slepian,
    run_spectrum,
    sample_lifted_domain,
    s_grid_from_r,
    slepian_spectrum,
    squared_field,
    svd_spectrum,
    uniform_grid,
    validate_fresnel_regime,
    weight_function,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
