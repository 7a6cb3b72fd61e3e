"""Exact-arithmetic toolkit for unit-interval category structures.

Continuous t-norms with their residuals, finite [0,1]-categories and
distributors, upper-set spaces of finite posets with their monad, and the
function-space duality audits that tie them together - everything checked
by exhaustive enumeration or seeded sampling on finite instances.
"""

from .tnorms import (
    GridChain,
    GridNotClosed,
    GridOps,
    Quantale,
    SampleSpec,
    grid_closed,
    hom,
    is_idempotent,
    is_nilpotent,
    lukasiewicz,
    minimum,
    no_zero_divisor_audit,
    ordinal_sum,
    product,
    tensor,
    truncated_minus,
    verify_quantale_axioms,
    verify_quantale_axioms_sampled,
)
from .posets import (
    FinPoset,
    all_posets,
    antichain,
    chain,
    down_closure,
    is_irreducible,
    kleisli_compose,
    poset,
    up_closure,
    upper_sets,
    verify_monad_laws,
    vietoris,
)
from .vcat import (
    VCategory,
    dual,
    from_poset,
    grid_chain_category,
    is_separated,
    is_vfunctor,
    natural_order,
    power_space,
    unit_category,
    validate_vcategory,
    vcategory,
)
from .vrel import (
    VRelation,
    check_adjoint,
    compose,
    identity_distributor,
    is_distributor,
    vrelation,
)
from .colimits import (
    FinSupAudit,
    WeightedDiagram,
    bottom,
    closure,
    closure_membership,
    conical_join,
    copower,
    is_cauchy_complete_desk,
    is_finitely_cocomplete,
    is_finsup_morphism,
    quasivariety_audit,
    upower,
    weighted_colimit,
    weighted_diagram,
)
from .duality import (
    ConditionReport,
    FunctionSpace,
    Functional,
    anti_set,
    c_of_distributor,
    check_conditions,
    function_space,
    phi_of,
    representability_audit,
    total_partial_audit,
    zero_set,
)
from .stone import (
    SubStructure,
    check_sep,
    density_at_level,
    down_set_indicators,
    generate_closure,
    sep_premise_audit,
    sw_audit,
)
from .enriched import (
    adjunction_audit,
    enriched_c,
    enumerate_cx,
    enumerate_enriched_categories,
    grid_distributors_into,
    is_cogenerated,
    lemma1_audit,
    pointsep_extension_audit,
    retract_phi,
    tensor_maximality_audit,
    twovalued_audit,
)
from .instances import InstanceDoc, InstanceError, parse_instance, parse_tnorm
from .reports import CheckReport, SuiteReport, emit_report, strip_timing
from .suites import SUITES, SuiteConfig, run_suite

__version__ = "0.1.0"
