"""Shared fixtures: the bundled two-mode benchmark model and helpers."""

import numpy as np
import pytest

from switched2d import model as mdl


def build_benchmark_model():
    """The bundled two-mode uncertain plant with sinusoidal delays/faults."""
    mode1 = mdl.ModeMatrices(
        A=[[1.0, 1.5], [0.6, 0.5]],
        A_d=[[-0.2, 0.0], [-0.1, -0.1]],
        B=[[-4.5, 0.0], [1.0, -3.0]],
        H=[[0.1, 0.15], [0.1, 0.2]],
        E=[[0.1, 0.15], [0.1, 0.0]],
        E_d=[[0.1, 0.0], [0.1, 0.1]],
        n1=1,
        n2=1,
    )
    mode2 = mdl.ModeMatrices(
        A=[[1.5, 1.5], [0.5, 0.5]],
        A_d=[[-0.15, 0.1], [-0.05, -0.05]],
        B=[[-5.0, 1.0], [-1.0, -3.0]],
        H=[[0.1, 0.12], [0.1, 0.1]],
        E=[[0.1, 0.12], [0.12, 0.1]],
        E_d=[[0.05, 0.1], [0.05, 0.1]],
        n1=1,
        n2=1,
    )
    fs1 = mdl.FaultSpec(low=[0.4, 0.5], high=[0.5, 0.6])
    fs2 = mdl.FaultSpec(low=[0.5, 0.4], high=[0.6, 0.5])
    delays = mdl.DelaySpec(
        d_hL=1, d_hH=3, d_vL=1, d_vH=3,
        d_h=mdl.SinusoidalDelay(2.0, 1.0, 0.5),
        d_v=mdl.SinusoidalDelay(2.0, 1.0, 0.5),
    )
    boundary = mdl.BoundaryConditions(z1=20, z2=20, h_edge=[4.0], v_edge=[3.0])
    uncertainties = [
        mdl.SinusoidalDiagonalUncertainty(p=2, q=2, wave="sin", frequency=0.5),
        mdl.SinusoidalDiagonalUncertainty(p=2, q=2, wave="cos", frequency=0.5),
    ]
    faults = [
        mdl.SinusoidalFaults(offsets=[0.45, 0.55], amplitudes=[0.05, 0.05],
                             wave="sin", frequency=0.5),
        mdl.SinusoidalFaults(offsets=[0.55, 0.45], amplitudes=[0.05, 0.05],
                             wave="cos", frequency=0.5),
    ]
    return mdl.SwitchedModel(
        modes=[mode1, mode2],
        fault_specs=[fs1, fs2],
        delays=delays,
        boundary=boundary,
        uncertainties=uncertainties,
        fault_realizations=faults,
    )


PRINTED_K1 = np.array([[0.1194, 0.7262], [0.3466, 0.1228]])
PRINTED_K2 = np.array([[0.3265, 0.5155], [0.2055, -0.2597]])
PRINTED_UPSILON1 = np.array([[0.0494, 0.1547], [0.1435, 0.0262]])
PRINTED_UPSILON2 = np.array([[0.1352, 0.1098], [0.0851, -0.0553]])
PRINTED_Z = np.diag([0.4141, 0.2131])


@pytest.fixture(scope="session")
def benchmark_model():
    return build_benchmark_model()
