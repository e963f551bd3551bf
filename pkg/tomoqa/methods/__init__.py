from .types import (
    METHOD_NAMES,
    MethodName,
    MethodSettings,
    MethodCaller,
    Reconstruction,
    ReconstructionProblem,
)
from .factory import (
    create_qa_method_caller,
    create_hybrid_method_caller,
    create_fbp_method_caller,
    create_sart_method_caller,
    create_pinv_method_caller,
)

__all__ = [
    "METHOD_NAMES",
    "MethodName",
    "MethodSettings",
    "MethodCaller",
    "Reconstruction",
    "ReconstructionProblem",
    "create_qa_method_caller",
    "create_hybrid_method_caller",
    "create_fbp_method_caller",
    "create_sart_method_caller",
    "create_pinv_method_caller",
]
