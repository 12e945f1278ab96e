use filtmult::convex::{brunn_minkowski_check, Polytope};
use filtmult::divisorial::{
    builtin_example, equality_classifier, find_rescaling, mixed_polynomial,
    piecewise_multiplicity, DivisorCoeffs, IntersectionTensor, NefEnvelope,
};
use filtmult::error::Error;
use filtmult::monomial::{gamma, Filtration, WeightValuation};
use filtmult::multiplicity::{
    default_schedule, minkowski_equality_test, mixed_multiplicities_par,
    multiplicity_limit_estimated, trsk_check, HomogeneousForm, IneqStatus, TrskVerdict,
};
use filtmult::numeric::{Rational, Scalar};
use filtmult::okounkov::{delta_body, truncation_lambda};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::render::{scalar_json, scalar_str, Report};

pub struct Config {
    pub schedule: Option<Vec<u64>>,
    pub m_max: u64,
    pub n_max: u64,
    pub r_max: u64,
    pub q_cap: u64,
    pub digits: usize,
    pub threads: usize,
}

pub enum CmdError {
    Input(String),
    Math(Error),
    Undecided(String),
}

impl From<Error> for CmdError {
    fn from(e: Error) -> CmdError {
        match e {
            Error::InvalidInput(_) | Error::DimensionMismatch { .. } => {
                CmdError::Input(e.to_string())
            }
            Error::PrecisionExhausted(_)
            | Error::NoStabilization(_)
            | Error::CapReached(_)
            | Error::RationalityUndecided(_)
            | Error::IllConditioned(_) => CmdError::Undecided(e.to_string()),
            other => CmdError::Math(other),
        }
    }
}

impl CmdError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CmdError::Input(_) => 2,
            CmdError::Math(_) => 3,
            CmdError::Undecided(_) => 4,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CmdError::Input(m) => format!("input error: {m}"),
            CmdError::Math(e) => format!("precondition failed: {e}"),
            CmdError::Undecided(m) => format!("undecided within caps: {m}"),
        }
    }
}

type CmdResult = Result<Report, CmdError>;

fn parse<T: for<'de> Deserialize<'de>>(input: &str) -> Result<T, CmdError> {
    serde_json::from_str(input).map_err(|e| CmdError::Input(e.to_string()))
}

fn schedule_for(cfg: &Config, dim: usize) -> Vec<u64> {
    cfg.schedule.clone().unwrap_or_else(|| default_schedule(dim))
}

#[derive(Deserialize)]
struct PairInput {
    f1: Filtration,
    f2: Filtration,
}

#[derive(Deserialize)]
struct DivisorialPairInput {
    tensor: IntersectionTensor,
    envelope: NefEnvelope,
    d1: Vec<i64>,
    d2: Vec<i64>,
}

fn ineq_str(s: IneqStatus) -> &'static str {
    match s {
        IneqStatus::HoldsStrict => "holds (strict)",
        IneqStatus::Equality => "holds with equality",
        IneqStatus::Violated => "violated beyond bracket",
    }
}

pub fn cmd_mult(input: &str, cfg: &Config) -> CmdResult {
    let f: Filtration = parse(input)?;
    let schedule = schedule_for(cfg, f.dim());
    let limit = multiplicity_limit_estimated(&f, &schedule)?;
    let lambda = truncation_lambda(&f, cfg.m_max.min(4))?;
    let c = Scalar::from_int(lambda.lambda as i64);
    let volume = filtmult::okounkov::multiplicity_via_volume(&f, &c, cfg.m_max)?;
    let agree = limit.agrees_with(&volume.value) || (limit.exact && limit.value == volume.value);
    let mut report = Report::new();
    report.push("limit estimate", scalar_str(&limit.value, cfg.digits));
    report.push("limit bracket", format!("{:.3e}", limit.bracket));
    report.push("limit exact", limit.exact.to_string());
    report.push("volume route", scalar_str(&volume.value, cfg.digits));
    report.push("volume exact", volume.exact.to_string());
    report.push("agreement", agree.to_string());
    report.json = json!({
        "limit": {
            "value": scalar_json(&limit.value, cfg.digits),
            "bracket": limit.bracket,
            "exact": limit.exact,
        },
        "volume": {
            "value": scalar_json(&volume.value, cfg.digits),
            "exact": volume.exact,
        },
        "agreement": agree,
    });
    Ok(report)
}

fn form_str(form: &HomogeneousForm, digits: usize) -> String {
    let d = form.degree();
    let mut parts = vec![];
    for (i, c) in form.coefficients().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut term = format!("({})", scalar_str(c, digits));
        let p1 = d - i as u32;
        let p2 = i as u32;
        if p1 > 0 {
            term.push_str(&format!("*n1{}", if p1 > 1 { format!("^{p1}") } else { String::new() }));
        }
        if p2 > 0 {
            term.push_str(&format!("*n2{}", if p2 > 1 { format!("^{p2}") } else { String::new() }));
        }
        parts.push(term);
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

pub fn cmd_mixed(input: &str, cfg: &Config) -> CmdResult {
    if let Ok(div) = serde_json::from_str::<DivisorialPairInput>(input) {
        div.envelope.validate()?;
        let d1 = DivisorCoeffs::from_ints(&div.d1);
        let d2 = DivisorCoeffs::from_ints(&div.d2);
        let form = mixed_polynomial(&div.tensor, &div.envelope, &d1, &d2)?;
        let mut report = Report::new();
        report.push("model", "divisorial");
        report.push("mixed polynomial", form_str(&form, cfg.digits));
        for (i, c) in form.coefficients().iter().enumerate() {
            report.push(
                format!("coefficient n1^{} n2^{}", form.degree() - i as u32, i),
                scalar_str(c, cfg.digits),
            );
        }
        report.json = json!({
            "model": "divisorial",
            "coefficients": form
                .coefficients()
                .iter()
                .map(|c| scalar_json(c, cfg.digits))
                .collect::<Vec<_>>(),
        });
        return Ok(report);
    }
    let pair: PairInput = parse(input)?;
    let schedule = schedule_for(cfg, pair.f1.dim());
    let e = mixed_multiplicities_par(&pair.f1, &pair.f2, &schedule, cfg.threads)?;
    let mut report = Report::new();
    report.push("model", "monomial");
    for (i, v) in e.values.iter().enumerate() {
        report.push(format!("e_{i}"), scalar_str(v, cfg.digits));
    }
    report.push(
        "brackets",
        e.brackets
            .iter()
            .map(|b| format!("{b:.3e}"))
            .collect::<Vec<_>>()
            .join(" "),
    );
    report.push("exact", e.exact.to_string());
    report.json = json!({
        "model": "monomial",
        "e": e.values.iter().map(|v| scalar_json(v, cfg.digits)).collect::<Vec<_>>(),
        "brackets": e.brackets,
        "exact": e.exact,
    });
    Ok(report)
}

pub fn cmd_minkowski(input: &str, cfg: &Config) -> CmdResult {
    if let Ok(div) = serde_json::from_str::<DivisorialPairInput>(input) {
        div.envelope.validate()?;
        let d1 = DivisorCoeffs::from_ints(&div.d1);
        let d2 = DivisorCoeffs::from_ints(&div.d2);
        let class = equality_classifier(&div.envelope, &div.tensor, &d1, &d2)?;
        let mut report = Report::new();
        report.push("model", "divisorial");
        report.push(
            "verdict",
            if class.equality { "EQUALITY" } else { "STRICT" },
        );
        if let Some(r) = &class.ratio {
            report.push("ratio", scalar_str(r, cfg.digits));
        }
        for (i, v) in class.mixed.iter().enumerate() {
            report.push(format!("e_{i}"), scalar_str(v, cfg.digits));
        }
        report.json = json!({
            "model": "divisorial",
            "verdict": if class.equality { "EQUALITY" } else { "STRICT" },
            "ratio": class.ratio.as_ref().map(|r| scalar_json(r, cfg.digits)),
            "e": class.mixed.iter().map(|v| scalar_json(v, cfg.digits)).collect::<Vec<_>>(),
            "regions": { "d1": class.regions1, "d2": class.regions2 },
        });
        return Ok(report);
    }
    let pair: PairInput = parse(input)?;
    let schedule = schedule_for(cfg, pair.f1.dim());
    let v = minkowski_equality_test(&pair.f1, &pair.f2, &schedule)?;
    let mut report = Report::new();
    report.push("model", "monomial");
    report.push("verdict", if v.equality { "EQUALITY" } else { "STRICT" });
    for (i, e) in v.e.values.iter().enumerate() {
        report.push(format!("e_{i}"), scalar_str(e, cfg.digits));
    }
    for (label, statuses) in [
        ("log-convexity", &v.report.log_convexity),
        ("symmetric products", &v.report.symmetric_products),
        ("power bounds", &v.report.power_bounds),
    ] {
        report.push(
            label,
            statuses
                .iter()
                .map(|&s| ineq_str(s))
                .collect::<Vec<_>>()
                .join("; "),
        );
    }
    report.push("minkowski inequality", ineq_str(v.report.minkowski));
    if let Some(r) = &v.ratio {
        report.push("ratio", scalar_str(r, cfg.digits));
    }
    if let Some(h) = &v.homothety {
        report.push("body homothety", h.equal.to_string());
        report.push("body deviation", format!("{:.3e}", h.max_deviation));
    }
    if let Some(g) = &v.gamma_ratios {
        report.push("gamma ratios agree", g.all_match.to_string());
    }
    report.json = json!({
        "e": v.e.values.iter().map(|x| scalar_json(x, cfg.digits)).collect::<Vec<_>>(),
        "brackets": v.e.brackets,
        "inequalities": {
            "1": v.report.log_convexity.iter().map(|&s| ineq_str(s)).collect::<Vec<_>>(),
            "2": v.report.symmetric_products.iter().map(|&s| ineq_str(s)).collect::<Vec<_>>(),
            "3": v.report.power_bounds.iter().map(|&s| ineq_str(s)).collect::<Vec<_>>(),
            "4": ineq_str(v.report.minkowski),
        },
        "verdict": if v.equality { "EQUALITY" } else { "STRICT" },
        "evidence": {
            "ratio": v.ratio.as_ref().map(|r| scalar_json(r, cfg.digits)),
            "homothety": v.homothety.as_ref().map(|h| json!({
                "equal": h.equal,
                "max_deviation": h.max_deviation,
                "exact": h.exact,
            })),
            "gamma_ratios": v.gamma_ratios.as_ref().map(|g| json!({
                "all_match": g.all_match,
            })),
        },
    });
    Ok(report)
}

pub fn cmd_trsk(input: &str, cfg: &Config) -> CmdResult {
    if let Ok(div) = serde_json::from_str::<DivisorialPairInput>(input) {
        div.envelope.validate()?;
        let d1 = DivisorCoeffs::from_ints(&div.d1);
        let d2 = DivisorCoeffs::from_ints(&div.d2);
        let outcome = match find_rescaling(&div.envelope, &div.tensor, &d1, &d2, cfg.q_cap) {
            Ok(o) => o,
            Err(Error::NotEquality) => {
                let mut report = Report::new();
                report.push("verdict", "STRICT");
                report.json = json!({ "verdict": "STRICT" });
                return Ok(report);
            }
            Err(e) => return Err(e.into()),
        };
        let mut report = Report::new();
        match outcome.pair {
            Some((a, b)) => {
                report.push("verdict", format!("rescaling ({a}, {b})"));
                report.push("ratio", scalar_str(&outcome.ratio, cfg.digits));
                report.json = json!({
                    "verdict": "PAIR",
                    "a": a,
                    "b": b,
                    "ratio": scalar_json(&outcome.ratio, cfg.digits),
                });
            }
            None => {
                report.push("verdict", "irrational ratio");
                report.push("falsification", outcome.falsification.to_string());
                report.json = json!({
                    "verdict": "IRRATIONAL",
                    "falsification": outcome.falsification,
                });
            }
        }
        return Ok(report);
    }
    let pair: PairInput = parse(input)?;
    let schedule = schedule_for(cfg, pair.f1.dim());
    let verdict = trsk_check(
        &pair.f1,
        &pair.f2,
        &schedule,
        cfg.n_max,
        cfg.q_cap,
        cfg.r_max,
    )?;
    let mut report = Report::new();
    match verdict {
        TrskVerdict::Pair { a, b } => {
            report.push("verdict", format!("rescaling ({a}, {b})"));
            report.json = json!({ "verdict": "PAIR", "a": a, "b": b });
        }
        TrskVerdict::Strict => {
            report.push("verdict", "STRICT");
            report.json = json!({ "verdict": "STRICT" });
        }
        TrskVerdict::Undecided { q_cap } => {
            return Err(CmdError::Undecided(format!(
                "no rescaling certified within q <= {q_cap}"
            )));
        }
    }
    Ok(report)
}

#[derive(Deserialize)]
struct GammaInput {
    #[serde(default)]
    f: Option<Filtration>,
    #[serde(default)]
    mu: Option<Vec<u64>>,
    #[serde(default)]
    envelope: Option<NefEnvelope>,
    #[serde(default)]
    d: Option<Vec<i64>>,
}

pub fn cmd_gamma(input: &str, cfg: &Config) -> CmdResult {
    let parsed: GammaInput = parse(input)?;
    let mut report = Report::new();
    match (parsed.f, parsed.mu, parsed.envelope, parsed.d) {
        (Some(f), Some(mu), None, None) => {
            let mu = WeightValuation::new(mu).map_err(CmdError::from)?;
            let g = gamma(&f, &mu, cfg.m_max)?;
            report.push("upper bound", g.upper.to_string());
            report.push("attained at m", g.at_m.to_string());
            report.push("tail tau/m", g.last.to_string());
            match &g.exact {
                Some(v) => report.push("exact value", scalar_str(v, cfg.digits)),
                None => report.push("exact value", "-"),
            }
            report.json = json!({
                "upper": g.upper.to_string(),
                "at_m": g.at_m,
                "last": g.last.to_string(),
                "exact": g.exact.as_ref().map(|v| scalar_json(v, cfg.digits)),
            });
        }
        (None, None, Some(env), Some(d)) => {
            env.validate()?;
            let coeffs = DivisorCoeffs::from_ints(&d);
            let g = env.gamma(&coeffs)?;
            for (i, v) in g.iter().enumerate() {
                report.push(format!("gamma_{i}"), scalar_str(v, cfg.digits));
            }
            report.json = json!({
                "gamma": g.iter().map(|v| scalar_json(v, cfg.digits)).collect::<Vec<_>>(),
            });
        }
        _ => {
            return Err(CmdError::Input(
                "expected {f, mu} or {envelope, d}".into(),
            ))
        }
    }
    Ok(report)
}

#[derive(Deserialize)]
struct BodyInput {
    f: Filtration,
    c: Scalar,
}

pub fn cmd_body(input: &str, cfg: &Config) -> CmdResult {
    let parsed: BodyInput = parse(input)?;
    let body = delta_body(&parsed.f, &parsed.c, cfg.m_max)?;
    let mut report = Report::new();
    report.push("c", scalar_str(&body.c, cfg.digits));
    report.push("m_max", body.m_max.to_string());
    report.push("exact", body.exact.to_string());
    report.push(
        "volume",
        scalar_str(&body.body.volume_exact()?, cfg.digits),
    );
    for (i, v) in body.body.vertices().iter().enumerate() {
        report.push(
            format!("vertex {i}"),
            v.iter()
                .map(|c| scalar_str(c, cfg.digits))
                .collect::<Vec<_>>()
                .join(", "),
        );
    }
    let mut json = serde_json::to_value(&body.body).map_err(|e| CmdError::Input(e.to_string()))?;
    if let Value::Object(map) = &mut json {
        map.insert("c".into(), scalar_json(&body.c, cfg.digits));
        map.insert("m_max".into(), json!(body.m_max));
        map.insert("exact".into(), json!(body.exact));
    }
    report.json = json;
    Ok(report)
}

#[derive(Deserialize)]
struct ClosureInput {
    f: Filtration,
    m: u64,
}

pub fn cmd_closure(input: &str, cfg: &Config) -> CmdResult {
    let parsed: ClosureInput = parse(input)?;
    let closure = Filtration::closure(parsed.f, cfg.r_max)?;
    let level = closure.level(parsed.m)?;
    let mut report = Report::new();
    report.push("level", parsed.m.to_string());
    report.push("r_max", cfg.r_max.to_string());
    report.push("approximate", closure.is_closure_approximate().to_string());
    report.push(
        "generators",
        level
            .generators()
            .iter()
            .map(|g| format!("{:?}", g.coords()))
            .collect::<Vec<_>>()
            .join(" "),
    );
    report.json = json!({
        "level": parsed.m,
        "r_max": cfg.r_max,
        "approximate": closure.is_closure_approximate(),
        "gens": level.generators().iter().map(|g| g.coords().to_vec()).collect::<Vec<_>>(),
    });
    Ok(report)
}

#[derive(Deserialize)]
struct BmInput {
    k: Polytope,
    l: Polytope,
    t: Rational,
}

pub fn cmd_bm(input: &str, cfg: &Config) -> CmdResult {
    let parsed: BmInput = parse(input)?;
    let r = brunn_minkowski_check(&parsed.k, &parsed.l, &parsed.t)?;
    let mut report = Report::new();
    report.push("lhs", scalar_str(&r.lhs, cfg.digits));
    report.push("rhs", scalar_str(&r.rhs, cfg.digits));
    report.push("holds", r.holds.to_string());
    report.push("strict", r.strict.to_string());
    report.push("exact", r.exact.to_string());
    report.json = json!({
        "lhs": scalar_json(&r.lhs, cfg.digits),
        "rhs": scalar_json(&r.rhs, cfg.digits),
        "holds": r.holds,
        "strict": r.strict,
        "exact": r.exact,
    });
    Ok(report)
}

pub fn cmd_example_c7(cfg: &Config) -> CmdResult {
    let (tensor, envelope) = builtin_example();
    envelope.validate()?;
    let digits = cfg.digits;
    let e1 = DivisorCoeffs::from_ints(&[1, 0]);
    let e2 = DivisorCoeffs::from_ints(&[0, 1]);

    let mut report = Report::new();
    report.push("", "built-in threefold example: two exceptional divisors on a blowup of a 3-dimensional base");
    report.push("", "");
    report.push("", "intersection numbers:");
    for (key, value) in tensor.entries() {
        let name = key
            .iter()
            .map(|&i| tensor.labels()[i].clone())
            .collect::<Vec<_>>()
            .join(".");
        report.push("", format!("  ({name}) = {value}"));
    }
    report.push("", "");
    report.push("", "regions of the coefficient plane for D = n1 E1 + n2 E2:");
    report.push("", "  region 1:  n2 <= n1");
    report.push("", "  region 2:  n1 <= n2 <= (3 - 1/3*sqrt(3))*n1");
    report.push("", "  region 3:  (3 - 1/3*sqrt(3))*n1 <= n2");
    report.push("", "");
    report.push("", "gamma table:");
    let gamma_rows = [
        ("region 1", "n1", "n1"),
        ("region 2", "n1", "n2"),
        ("region 3", "(9/26 + 1/26*sqrt(3))*n2", "n2"),
    ];
    for (region, g1, g2) in gamma_rows {
        report.push("", format!("  {region}:  gamma_E1 = {g1},  gamma_E2 = {g2}"));
    }
    report.push("", "");
    report.push("", "multiplicity function e(n1 E1 + n2 E2)/3! by region:");
    let pieces = piecewise_multiplicity(&tensor, &envelope, &e1, &e2)?;
    for piece in &pieces {
        report.push(
            "",
            format!("  region {}:  {}", piece.cone + 1, form_str(&piece.form, digits)),
        );
    }
    report.push("", "");
    report.push("", "mixed polynomial P(n1, n2) of the pair (E1, E2):");
    let mixed = mixed_polynomial(&tensor, &envelope, &e1, &e2)?;
    report.push("", format!("  {}", form_str(&mixed, digits)));
    report.push("", "");
    report.push("", "Minkowski equality between regions:");
    let matrix = [
        ("region 1 x region 1", "always"),
        ("region 1 x region 2", "never"),
        ("region 1 x region 3", "never"),
        ("region 2 x region 2", "iff rational multiple"),
        ("region 2 x region 3", "never"),
        ("region 3 x region 3", "always"),
    ];
    for (pair, verdict) in matrix {
        report.push("", format!("  {pair}:  {verdict}"));
    }

    report.json = json!({
        "intersection_numbers": {
            "E1.E1.E1": 468, "E1.E1.E2": -162, "E1.E2.E2": 54, "E2.E2.E2": 54,
        },
        "pieces": pieces.iter().map(|p| json!({
            "region": p.cone + 1,
            "coefficients": p.form.coefficients().iter().map(|c| scalar_json(c, digits)).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "mixed_polynomial": mixed.coefficients().iter().map(|c| scalar_json(c, digits)).collect::<Vec<_>>(),
        "classification": {
            "r1_r1": "always", "r1_r2": "never", "r1_r3": "never",
            "r2_r2": "iff rational multiple", "r2_r3": "never", "r3_r3": "always",
        },
    });
    Ok(report)
}
