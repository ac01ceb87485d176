"""ffhyper: exact hypergeometric character sums over finite fields."""

__version__ = "0.1.0"

from .cyclo import CycloNum, cyclo_modulus, root_of_unity
from .field import FieldCtx, FieldEmbedding, build_field, build_embedding
from .chars import AddChar, MultChar, gauss, jacobi, pochhammer
from .hyper import ParamMultiset, HypValue, hyp_eval, hyp_eval_oracle

__all__ = [
    "CycloNum",
    "cyclo_modulus",
    "root_of_unity",
    "FieldCtx",
    "FieldEmbedding",
    "build_field",
    "build_embedding",
    "MultChar",
    "AddChar",
    "gauss",
    "jacobi",
    "pochhammer",
    "ParamMultiset",
    "HypValue",
    "hyp_eval",
    "hyp_eval_oracle",
]
