use std::fmt::Write as _;
use std::path::Path;

use logred_core::dualgraph::{
    contract, contract_all, kodaira, saito_check, scale, strata_model, DualGraph, KodairaType,
    SaitoVerdict,
};
use logred_core::fan::{chart_log_smooth, classify, validate_fan, Smoothness};
use logred_core::genus1::{
    decide, h1_tame_default, ordinarity_gate, Gate, Genus1Input, Reduction,
};
use logred_core::io::{graph_to_file, parse_any, render_graph, GraphInput, Input};
use logred_core::model::{
    check_degeneration_restrictions, check_prop_vanishing, p_locus_euler, tame_euler,
    tame_point_criterion, tame_point_exists, tame_zeta, EulerCriterionStatus, LogModel,
};
use logred_core::prime::Prime;
use logred_core::report::Violation;
use logred_core::{Error, Result};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::Command;

pub struct Outcome {
    result: Value,
    human: String,
    /// Extra diagnostics for stderr in human mode.
    note: String,
    exit: u8,
}

impl Outcome {
    fn new(result: Value, human: String, exit: u8) -> Self {
        Outcome {
            result,
            human,
            note: String::new(),
            exit,
        }
    }

    fn with_note(mut self, note: String) -> Self {
        self.note = note;
        self
    }
}

pub struct Run {
    command: &'static str,
    digest: String,
    outcome: Result<Outcome>,
}

impl Run {
    pub fn exit_code(&self) -> u8 {
        match &self.outcome {
            Ok(o) => o.exit,
            Err(_) => 2,
        }
    }

    /// `(stdout, stderr)` text.
    pub fn render(&self, as_json: bool) -> (String, String) {
        match (&self.outcome, as_json) {
            (Ok(o), true) => (self.envelope(o.result.clone()), String::new()),
            (Ok(o), false) => (o.human.clone(), o.note.clone()),
            (Err(e), true) => (
                self.envelope(json!({"error": {"code": e.code(), "message": e.to_string()}})),
                error_line(e),
            ),
            (Err(e), false) => (String::new(), error_line(e)),
        }
    }

    fn envelope(&self, result: Value) -> String {
        let v = json!({
            "command": self.command,
            "input_digest": self.digest,
            "result": result,
        });
        let mut s = serde_json::to_string(&v).expect("values serialize");
        s.push('\n');
        s
    }
}

fn error_line(e: &Error) -> String {
    format!("error[{}]: {e}\n", e.code())
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn load(path: &Path) -> (String, Result<Input>) {
    match std::fs::read(path) {
        Ok(bytes) => (sha256_hex(&bytes), parse_any(&bytes)),
        Err(e) => (
            String::new(),
            Err(Error::InvalidInput(format!("cannot read {}: {e}", path.display()))),
        ),
    }
}

fn name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Validate(_) => "validate",
        Command::Classify(_) => "classify",
        Command::Zeta(_) => "zeta",
        Command::Euler(_) => "euler",
        Command::TamePoint(_) => "tame-point",
        Command::CheckSmooth(_) => "check-smooth",
        Command::Restrictions(_) => "restrictions",
        Command::Saito(_) => "saito",
        Command::Scale { .. } => "scale",
        Command::Contract { .. } => "contract",
        Command::Kodaira { .. } => "kodaira",
        Command::Genus1 { .. } => "genus1",
    }
}

pub fn run(cmd: &Command) -> Run {
    let command = name(cmd);
    let (digest, outcome) = match cmd {
        Command::Kodaira { symbol, n, p, dot } => {
            let args = format!("kodaira type={symbol} n={n:?} p={p} dot={dot}");
            (sha256_hex(args.as_bytes()), run_kodaira(symbol, *n, *p, *dot))
        }
        Command::Genus1 {
            p,
            period,
            h1_tame,
            jacobian,
            coh_flat,
            mu,
            supersingular,
        } => {
            let args = format!(
                "genus1 p={p} period={period} h1_tame={h1_tame} jacobian={jacobian} \
                 coh_flat={coh_flat:?} mu={mu:?} supersingular={supersingular:?}"
            );
            let outcome = run_genus1(*p, *period, h1_tame, jacobian, *coh_flat, *mu, *supersingular);
            (sha256_hex(args.as_bytes()), outcome)
        }
        Command::Validate(f)
        | Command::Classify(f)
        | Command::Zeta(f)
        | Command::Euler(f)
        | Command::TamePoint(f)
        | Command::CheckSmooth(f)
        | Command::Restrictions(f)
        | Command::Saito(f)
        | Command::Scale { input: f, .. }
        | Command::Contract { input: f, .. } => {
            let (digest, input) = load(&f.file);
            (digest, input.and_then(|i| on_file(cmd, i)))
        }
    };
    Run {
        command,
        digest,
        outcome,
    }
}

fn as_model(input: Input) -> Result<LogModel> {
    match input {
        Input::Model(m) => Ok(m),
        Input::Graph(g) => strata_model(&g.graph, g.p),
    }
}

fn as_graph(input: Input) -> Result<GraphInput> {
    match input {
        Input::Graph(g) => Ok(g),
        Input::Model(_) => Err(Error::InvalidInput(
            "this command needs a dual-graph file".into(),
        )),
    }
}

fn on_file(cmd: &Command, input: Input) -> Result<Outcome> {
    match cmd {
        Command::Validate(_) => run_validate(input),
        Command::Classify(_) => run_classify(&as_model(input)?),
        Command::Zeta(_) => run_zeta(&as_model(input)?),
        Command::Euler(_) => run_euler(&as_model(input)?),
        Command::TamePoint(_) => run_tame_point(&as_model(input)?),
        Command::CheckSmooth(_) => match input {
            Input::Model(m) => run_check_smooth(&m),
            Input::Graph(g) => run_saito(&g),
        },
        Command::Restrictions(_) => run_restrictions(&as_model(input)?),
        Command::Saito(_) => run_saito(&as_graph(input)?),
        Command::Scale { m, dot, .. } => {
            let g = as_graph(input)?;
            let scaled = scale(&g.graph, *m)?;
            Ok(graph_outcome(&scaled, g.p, *dot, json!({})))
        }
        Command::Contract { vertex, dot, .. } => {
            let g = as_graph(input)?;
            match vertex {
                Some(v) => {
                    let c = contract(&g.graph, v, g.p)?;
                    let extra = json!({"smoothness_preserved": c.smoothness_preserved});
                    let note = format!("contracted {v}; smoothness preserved: {}\n", yes_no(c.smoothness_preserved));
                    Ok(graph_outcome(&c.graph, g.p, *dot, extra).with_note(note))
                }
                None => {
                    let c = contract_all(&g.graph, g.p);
                    let extra = json!({
                        "contracted": c.contracted,
                        "smoothness_preserved": c.smoothness_preserved,
                    });
                    let note = format!(
                        "contracted [{}]; smoothness preserved: {}\n",
                        c.contracted.join(", "),
                        yes_no(c.smoothness_preserved)
                    );
                    Ok(graph_outcome(&c.graph, g.p, *dot, extra).with_note(note))
                }
            }
        }
        Command::Kodaira { .. } | Command::Genus1 { .. } => unreachable!("no input file"),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn list_violations(out: &mut String, vs: &[Violation]) {
    for v in vs {
        let rule = to_value(&v.rule);
        let _ = writeln!(out, "violation[{}] {}: {}", rule.as_str().unwrap_or(""), v.subject, v.detail);
    }
}

fn run_validate(input: Input) -> Result<Outcome> {
    let mut violations = Vec::new();
    match input {
        Input::Model(m) => violations.extend(validate_fan(m.fan(), m.p())),
        Input::Graph(g) => {
            violations.extend(g.graph.fibre_violations());
            let m = strata_model(&g.graph, g.p)?;
            violations.extend(validate_fan(m.fan(), m.p()));
        }
    }
    violations.sort();
    let valid = violations.is_empty();
    let mut human = String::new();
    if valid {
        human.push_str("valid\n");
    } else {
        list_violations(&mut human, &violations);
    }
    Ok(Outcome::new(
        json!({"valid": valid, "violations": violations}),
        human,
        if valid { 0 } else { 1 },
    ))
}

fn run_classify(m: &LogModel) -> Result<Outcome> {
    let part = classify(m.fan(), m.p())?;
    let join = |s: &std::collections::BTreeSet<String>| s.iter().cloned().collect::<Vec<_>>().join(", ");
    let human = format!(
        "p = {}\np-locus: {}\np'-locus: {}\n",
        m.p(),
        join(&part.p_locus),
        join(&part.pprime_locus)
    );
    Ok(Outcome::new(
        json!({"p": m.p(), "p_locus": part.p_locus, "pprime_locus": part.pprime_locus}),
        human,
        0,
    ))
}

fn run_zeta(m: &LogModel) -> Result<Outcome> {
    let z = tame_zeta(m);
    Ok(Outcome::new(
        json!({"factors": z, "product": z.to_string()}),
        format!("zeta_tame(t) = {z}\n"),
        0,
    ))
}

fn run_euler(m: &LogModel) -> Result<Outcome> {
    let chi = tame_euler(m)?;
    Ok(Outcome::new(json!({"chi_tame": chi}), format!("chi_tame = {chi}\n"), 0))
}

fn run_tame_point(m: &LogModel) -> Result<Outcome> {
    let exists = tame_point_exists(m);
    let witnesses: Vec<&str> = m
        .fan()
        .points()
        .iter()
        .filter(|pt| !pt.is_generic() && !m.p().divides(pt.msharp))
        .map(|pt| pt.id.as_str())
        .collect();
    let human = if exists {
        format!("K^t-point exists: p'-locus strata {}\n", witnesses.join(", "))
    } else {
        "no K^t-point: p-locus equals special fibre\n".to_string()
    };
    Ok(Outcome::new(
        json!({"tame_point_exists": exists, "pprime_strata": witnesses}),
        human,
        if exists { 0 } else { 1 },
    ))
}

fn run_check_smooth(m: &LogModel) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut human = String::new();
    let mut overall = Smoothness::Smooth;
    for pt in m.fan().points() {
        let Some(chart) = &pt.chart else { continue };
        let v = chart_log_smooth(chart, m.p())?;
        let status = to_value(&v.status);
        let _ = writeln!(human, "{}: {} ({})", pt.id, status.as_str().unwrap_or(""), v.reason);
        overall = match (overall, v.status) {
            (Smoothness::NotSmooth, _) | (_, Smoothness::NotSmooth) => Smoothness::NotSmooth,
            (Smoothness::Unknown, _) | (_, Smoothness::Unknown) => Smoothness::Unknown,
            _ => Smoothness::Smooth,
        };
        rows.push(json!({"point": pt.id, "status": v.status, "reason": v.reason}));
    }
    if rows.is_empty() {
        overall = Smoothness::Unknown;
        human.push_str("no charts given\n");
    }
    let status = to_value(&overall);
    let _ = writeln!(human, "overall: {}", status.as_str().unwrap_or(""));
    Ok(Outcome::new(
        json!({"overall": overall, "charts": rows}),
        human,
        if overall == Smoothness::NotSmooth { 1 } else { 0 },
    ))
}

fn saito_human(v: &SaitoVerdict) -> String {
    let mut out = String::new();
    if v.pass {
        out.push_str("Saito criterion: PASS\n");
    } else {
        out.push_str("Saito criterion: FAIL\n");
        for f in &v.failures {
            let _ = writeln!(out, "{}: {}", f.vertex, f.reasons.join("; "));
        }
    }
    out
}

fn run_saito(g: &GraphInput) -> Result<Outcome> {
    let v = saito_check(&g.graph, g.p)?;
    Ok(Outcome::new(to_value(&v), saito_human(&v), if v.pass { 0 } else { 1 }))
}

fn not_applicable(r: Result<Value>) -> Result<Value> {
    match r {
        Err(Error::NotApplicable(msg)) => Ok(json!({"not_applicable": msg})),
        other => other,
    }
}

fn run_restrictions(m: &LogModel) -> Result<Outcome> {
    let mut human = String::new();
    let mut failed = false;

    let vanishing = not_applicable(check_prop_vanishing(m).map(|vs| {
        failed |= !vs.is_empty();
        list_violations(&mut human, &vs);
        to_value(&vs)
    }))?;
    let degeneration = not_applicable(check_degeneration_restrictions(m).map(|r| {
        failed |= !r.violations.is_empty();
        list_violations(&mut human, &r.violations);
        for a in &r.advisories {
            let _ = writeln!(human, "advisory: {a}");
        }
        to_value(&r)
    }))?;
    let criterion = not_applicable(tame_point_criterion(m).map(|r| {
        let status = to_value(&r.status);
        let _ = writeln!(
            human,
            "chi_tame = {}, tame point: {}, status: {}",
            r.chi_tame,
            yes_no(r.tame_point_exists),
            status.as_str().unwrap_or("")
        );
        failed |= r.status == EulerCriterionStatus::InconsistentInput;
        to_value(&r)
    }))?;
    if !m.log_smooth_claimed() {
        human.push_str("not applicable: the model is not claimed to be log smooth\n");
    } else if !failed {
        human.push_str("no violations\n");
    }
    Ok(Outcome::new(
        json!({
            "log_smooth_claimed": m.log_smooth_claimed(),
            "p_locus_euler": p_locus_euler(m),
            "p_locus_vanishing": vanishing,
            "degeneration": degeneration,
            "euler_criterion": criterion,
        }),
        human,
        if failed { 1 } else { 0 },
    ))
}

fn graph_outcome(g: &DualGraph, p: Prime, dot: bool, mut extra: Value) -> Outcome {
    extra["graph"] = to_value(&graph_to_file(g, p));
    let human = if dot { g.to_dot() } else { render_graph(g, p) };
    Outcome::new(extra, human, 0)
}

fn run_kodaira(symbol: &str, n: Option<u32>, p: u64, dot: bool) -> Result<Outcome> {
    let t = KodairaType::parse(symbol, n)?;
    let p = Prime::new(p)?;
    let g = kodaira(t)?;
    let extra = json!({"type": t.to_string(), "euler_number": t.sncd_euler_number()});
    Ok(graph_outcome(&g, p, dot, extra))
}

fn parse_bool_or_auto(s: &str) -> Result<Option<bool>> {
    match s {
        "true" => Ok(Some(true)),
        "false" => Ok(Some(false)),
        "auto" => Ok(None),
        _ => Err(Error::InvalidInput(format!(
            "--h1-tame expects true, false or auto, found `{s}`"
        ))),
    }
}

fn run_genus1(
    p: u64,
    period: u64,
    h1_tame: &str,
    jacobian: &str,
    coh_flat: Option<bool>,
    mu: Option<u64>,
    supersingular: Option<bool>,
) -> Result<Outcome> {
    let p = Prime::new(p)?;
    let jacobian: Reduction = jacobian.parse()?;
    let h1_tame = match parse_bool_or_auto(h1_tame)? {
        Some(b) => b,
        None => h1_tame_default(p, jacobian).ok_or_else(|| {
            Error::MissingData(
                "tameness of H^1 is only automatic for p >= 5 with good or multiplicative \
                 Jacobian; pass --h1-tame true|false"
                    .into(),
            )
        })?,
    };
    let input = Genus1Input {
        p,
        period,
        h1_tame,
        jacobian,
        coh_flat,
        mu,
        supersingular,
    };
    let verdict = decide(&input)?;
    let ordinarity = match ordinarity_gate(&input) {
        Ok(g) => Some(g),
        Err(Error::NotApplicable(_)) => None,
        Err(e) => return Err(e),
    };
    let mut human = format!(
        "log good reduction: {} ({})\n",
        if verdict.log_good_reduction { "YES" } else { "NO" },
        verdict.reason
    );
    if let Some(Gate::Violation(msg)) = &ordinarity {
        let _ = writeln!(human, "warning: inconsistent input: {msg}");
    }
    Ok(Outcome::new(
        json!({
            "log_good_reduction": verdict.log_good_reduction,
            "reason": verdict.reason,
            "h1_tame": h1_tame,
            "ordinarity": ordinarity,
        }),
        human,
        if verdict.log_good_reduction { 0 } else { 1 },
    ))
}
