import pytest

from mediankit import kernels


@pytest.fixture(params=[m.BACKEND for m in kernels.backends()])
def backend(request):
    return next(m for m in kernels.backends() if m.BACKEND == request.param)
