//! Limit multiplicities, mixed multiplicities, and the Minkowski, Rees and
//! rescaling diagnostics for filtrations.

mod diagnostics;
mod form;
mod limits;

pub use diagnostics::{
    equal_mult_rigidity_check, gamma_ratio_check, minkowski_equality_test, minkowski_report,
    rees_equality_check, trsk_check, EqualityVerdict, GammaRatioReport, IneqStatus,
    MinkowskiReport, RigidityVerdict, TrskVerdict,
};
pub use form::HomogeneousForm;
pub use limits::{
    default_schedule, mixed_function, mixed_multiplicities, mixed_multiplicities_par,
    multiplicity_limit, multiplicity_limit_estimated, LimitEstimate, MixedMultiplicities,
};
