use crate::Common;
use chk_core::cherednik::{self, hom_dim, singular_vector_search, Claim};
use chk_core::params::{
    classify_lambda, cyclic_sum, in_alcove_set, rep_order, theta_order, DeformParam, StabParam,
};
use chk_core::quivergeom;
use chk_core::rational::parse_q_list;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Map, Value};

pub enum Failure {
    Regime(String),
    Io(String),
}

impl From<chk_core::Error> for Failure {
    fn from(e: chk_core::Error) -> Self {
        Failure::Regime(e.to_string())
    }
}

impl From<chk_core::params::ParamError> for Failure {
    fn from(e: chk_core::params::ParamError) -> Self {
        Failure::Regime(e.to_string())
    }
}

/// Graded dimensions of shift images are compared up to this degree.
pub const SHIFT_DEGREE: i64 = 10;

pub struct Outcome {
    pub report: Value,
    pub ok: bool,
}

pub type CmdResult = Result<Outcome, Failure>;

pub fn with_schema(report: Value) -> Value {
    match report {
        Value::Object(mut m) => {
            m.insert("schema".into(), json!(1));
            Value::Object(m)
        }
        other => json!({ "schema": 1, "report": other }),
    }
}

pub fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn check_rank(c: &Common, got: usize) -> Result<(), Failure> {
    match c.l {
        Some(l) if l != got => Err(Failure::Regime(format!("--l {l} but the parameter has {got} entries"))),
        _ => Ok(()),
    }
}

pub fn theta(c: &Common) -> Result<StabParam, Failure> {
    let s = c.theta.as_deref().ok_or_else(|| Failure::Regime("--theta is required".into()))?;
    let v: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| Failure::Regime(format!("bad --theta entry {x:?}: {e}"))))
        .collect::<Result<_, _>>()?;
    check_rank(c, v.len())?;
    Ok(StabParam::new(v)?)
}

pub fn lambda(c: &Common) -> Result<DeformParam, Failure> {
    let s = c.lambda.as_deref().ok_or_else(|| Failure::Regime("--lambda is required".into()))?;
    let v = parse_q_list(s).map_err(|e| Failure::Regime(format!("bad --lambda: {e}")))?;
    check_rank(c, v.len())?;
    Ok(DeformParam::new(v)?)
}

pub fn optional_lambda(c: &Common) -> Result<Option<DeformParam>, Failure> {
    c.lambda.as_ref().map(|_| lambda(c)).transpose()
}

pub fn cap(c: &Common, default: (u32, u32)) -> Result<(u32, u32), Failure> {
    let Some(s) = &c.cap else { return Ok(default) };
    let parts: Vec<u32> = s
        .split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|e| Failure::Regime(format!("bad --cap {s:?}: {e}"))))
        .collect::<Result<_, _>>()?;
    match parts[..] {
        [a, b] => Ok((a, b)),
        _ => Err(Failure::Regime(format!("--cap needs two entries, got {s:?}"))),
    }
}

fn all_pass(claims: &[Claim]) -> bool {
    claims.iter().all(Claim::passed)
}

/// The first failing claim, reported as the counterexample.
fn first_failure(claims: &[Claim]) -> Option<Value> {
    claims.iter().find(|c| !c.passed()).map(to_value)
}

pub fn order(c: &Common) -> CmdResult {
    let theta = theta(c)?;
    let eta = theta_order(&theta)?;
    let mut m = Map::new();
    m.insert("theta".into(), json!(theta.theta()));
    m.insert("eta".into(), json!(eta.eta()));
    m.insert("order".into(), json!(eta.order_string()));
    if let Some(lam) = optional_lambda(c)? {
        if lam.l() != theta.l() {
            return Err(Failure::Regime("--lambda and --theta have different lengths".into()));
        }
        m.insert("alcove".into(), json!(in_alcove_set(&lam, &theta)?));
        m.insert("lambda_class".into(), to_value(&classify_lambda(&lam)));
        m.insert("rep_order".into(), json!(rep_order(&lam).pairs()));
    }
    Ok(Outcome { report: Value::Object(m), ok: true })
}

pub fn homs_report(lam: &DeformParam) -> Outcome {
    let l = lam.l();
    let mut m = Map::new();
    let mut mismatches = Vec::new();
    for i in 0..l {
        for j in (0..l).filter(|&j| j != i) {
            let h = hom_dim(lam, i, j);
            let reach = h.n.unwrap_or_else(|| {
                (-cyclic_sum(lam.lambda(), i, j)).ceil().to_integer().to_u64().unwrap_or(0)
            });
            let found = singular_vector_search(lam, i, j, 4 * l * (reach as usize + 1));
            if found != h.embedding_degree {
                mismatches.push(json!({ "pair": [i, j], "closed_form": h.embedding_degree, "search": found }));
            }
            if h.dim == 1 {
                m.insert(format!("({i},{j})"), json!({ "dim": 1, "p": h.embedding_degree }));
            }
        }
    }
    let ok = mismatches.is_empty();
    if !ok {
        m.insert("mismatches".into(), Value::Array(mismatches));
    }
    Outcome { report: Value::Object(m), ok }
}

pub fn homs(c: &Common) -> CmdResult {
    Ok(homs_report(&lambda(c)?))
}

pub fn fixed_points_report(theta: &StabParam) -> Result<Outcome, Failure> {
    let eta = theta_order(theta)?;
    let l = theta.l();
    let g = quivergeom::geom_order(theta)?;
    let points: Vec<Value> = (1..=l)
        .map(|i| {
            let p = quivergeom::fixed_point_eta(theta, i)?;
            let u = quivergeom::curve_eta(theta, i)?;
            Ok(json!({ "position": i, "vertex": p.index, "slots": p.slots, "curve": u.slots }))
        })
        .collect::<Result<_, chk_core::Error>>()?;
    let claims = vec![
        Claim::new("geometric order = θ-order", &g.order == eta.order(), || format!("{:?}", g.incidence)),
        Claim::new("curves meet only their neighbours", g.chain_only, || format!("{:?}", g.incidence)),
    ];
    let ok = all_pass(&claims);
    Ok(Outcome {
        report: json!({ "eta": eta.eta(), "fixed_points": points, "incidence": g.incidence, "claims": claims }),
        ok,
    })
}

pub fn fixed_points(c: &Common) -> CmdResult {
    fixed_points_report(&theta(c)?)
}

pub fn charts_report(theta: &StabParam) -> Result<Outcome, Failure> {
    let r = quivergeom::charts(theta)?;
    let ok = all_pass(&r.claims);
    let mut v = to_value(&r);
    if let Some(f) = first_failure(&r.claims) {
        v["counterexample"] = f;
    }
    Ok(Outcome { report: v, ok })
}

pub fn charts(c: &Common) -> CmdResult {
    charts_report(&theta(c)?)
}

pub fn sections_report(theta: &StabParam, m: i64, cap: (u32, u32)) -> Result<Outcome, Failure> {
    let eta = theta_order(theta)?;
    let mut cols = Vec::new();
    let mut ok = true;
    let mut counterexample = None;
    for k in 0..theta.l() {
        let r = quivergeom::sections(&theta.column_weight(m, k), &eta, cap)?;
        ok &= r.all_pass();
        counterexample = counterexample.or_else(|| first_failure(&r.claims).map(|f| json!({ "column": k, "claim": f })));
        cols.push(json!({ "column": k, "report": r }));
    }
    Ok(Outcome { report: json!({ "m": m, "cap": cap, "columns": cols, "counterexample": counterexample }), ok })
}

pub fn sections(c: &Common) -> CmdResult {
    let m = c.m.unwrap_or(1);
    if m < 1 {
        return Err(Failure::Regime(format!("sections need m ≥ 1, got {m}")));
    }
    sections_report(&theta(c)?, m, cap(c, (8, 8))?)
}

pub fn abl_report(theta: &StabParam, m: i64, window: usize, cap: u32) -> Result<Outcome, Failure> {
    let r = quivergeom::abl_character(theta, m, window)?;
    let mut ok = r.equal;
    let mut two = Vec::new();
    if m >= 1 {
        for k in 0..theta.l() {
            let t = quivergeom::abl_two_variable(theta, m, k, cap)?;
            ok &= all_pass(&t.claims);
            two.push(t);
        }
    }
    let counterexample = first_failure(&r.claims).or_else(|| two.iter().find_map(|t| first_failure(&t.claims)));
    Ok(Outcome {
        report: json!({
            "equal": ok,
            "m": m,
            "closed_form": r.closed_form,
            "enumerated": r.enumerated,
            "localization": r.localization,
            "claims": r.claims,
            "two_variable": two,
            "counterexample": counterexample,
        }),
        ok,
    })
}

pub fn abl_verify(c: &Common) -> CmdResult {
    let theta = theta(c)?;
    let m = c.m.unwrap_or(1);
    let window = c.window.unwrap_or(15);
    abl_report(&theta, m, window, cap(c, (12, 12))?.0)
}

pub fn shift_report(lam: &DeformParam, theta: &StabParam, degree: i64, window: usize) -> Result<Outcome, Failure> {
    let l = theta.l();
    let mut ok = true;
    let mut images = Vec::new();
    let mut counterexample = None;
    for i in 1..=l {
        let r = cherednik::shift_image(lam, theta, i, degree)?;
        let p = cherednik::shift_generator(lam, theta, i)?;
        ok &= r.all_pass() && p.all_pass();
        counterexample = counterexample.or_else(|| first_failure(&r.claims)).or_else(|| first_failure(&p.claims));
        images.push(json!({ "image": r, "generator": p }));
    }
    let qdim = if classify_lambda(lam).in_tilde_rreg {
        let q = cherednik::q_dimension(lam, theta, window)?;
        ok &= q.equal;
        Some(q)
    } else {
        None
    };
    Ok(Outcome { report: json!({ "ok": ok, "images": images, "q_dimension": qdim, "counterexample": counterexample }), ok })
}

pub fn shift_verify(c: &Common) -> CmdResult {
    let lam = lambda(c)?;
    let theta = theta(c)?;
    shift_report(&lam, &theta, SHIFT_DEGREE, c.window.unwrap_or(12))
}

pub fn gr_report(lam: &DeformParam, theta: &StabParam, m: i64, cap: (u32, u32)) -> Result<Outcome, Failure> {
    let r = quivergeom::gr_main_check(lam, theta, m, cap)?;
    let counterexample = r.columns.iter().find_map(|c| {
        c.dims.iter().find(|(_, (a, b))| a != b).map(|(d, v)| json!({ "column": c.column, "bidegree": d, "dims": v }))
    });
    let ok = r.equal;
    Ok(Outcome { report: json!({ "equal": ok, "report": r, "counterexample": counterexample }), ok })
}

pub fn gr_verify(c: &Common) -> CmdResult {
    let lam = lambda(c)?;
    let theta = theta(c)?;
    gr_report(&lam, &theta, c.m.unwrap_or(1), cap(c, (6, 6))?)
}

pub fn ch_report(theta: &StabParam, lam: Option<&DeformParam>) -> Result<Outcome, Failure> {
    let r = quivergeom::ch_cycles(theta)?;
    let mut ok = all_pass(&r.claims);
    let mut counterexample = first_failure(&r.claims);
    let mut simple = Vec::new();
    if let Some(lam) = lam {
        for i in 1..=theta.l() {
            if let Some(rec) = quivergeom::rch_simple(lam, theta, i)? {
                ok &= all_pass(&rec.claims);
                counterexample = counterexample.or_else(|| first_failure(&rec.claims));
                simple.push(rec);
            }
        }
    }
    Ok(Outcome { report: json!({ "standard": r, "simple": simple, "counterexample": counterexample }), ok })
}

pub fn ch_cycles(c: &Common) -> CmdResult {
    let theta = theta(c)?;
    let lam = optional_lambda(c)?;
    ch_report(&theta, lam.as_ref())
}
