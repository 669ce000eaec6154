use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use schur_vertex_core::oracle::AlphabetSpec;
use schur_vertex_core::partition::partitions_up_to;
use schur_vertex_core::{
    gamma_one, involution_report, murnaghan_nakayama_perp, p_perp, row_exchange_straighten,
    staircase_straighten, vertex_lemma, vertex_lhs, vertex_rhs, IntegerSequence, Partition,
    VertexSeries,
};
use serde_json::{json, Value};

use crate::json::{
    cell_to_json, expansion_to_json, involution_to_json, series_to_json, straightening_to_json,
};
use crate::report::{RunReport, Tally};
use crate::suites::{self, Window};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] schur_vertex_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Core(_) => 1,
        }
    }
}

pub fn parse_sequence(s: &str) -> Result<IntegerSequence, CliError> {
    IntegerSequence::from_str(s).map_err(|e| CliError::Parse(e.to_string()))
}

pub fn parse_partition(s: &str) -> Result<Partition, CliError> {
    Partition::from_str(s).map_err(|e| CliError::Parse(format!("{}: {}", s.trim(), e)))
}

/// `a:b`, inclusive, `a ≤ b`.
pub fn parse_window(s: &str) -> Result<Window, CliError> {
    let bad = |token: &str, reason: &str| CliError::Parse(format!("cannot parse {:?}: {}", token, reason));
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| bad(s, "expected a range such as -6:8"))?;
    let a: i64 = a.trim().parse().map_err(|_| bad(a, "not an integer"))?;
    let b: i64 = b.trim().parse().map_err(|_| bad(b, "not an integer"))?;
    if a > b {
        return Err(bad(s, "range start exceeds range end"));
    }
    Ok((a, b))
}

/// `p` or `p,q`.
pub fn parse_vars(s: &str) -> Result<(usize, usize), CliError> {
    let bad = |token: &str| CliError::Parse(format!("cannot parse {:?}: not a variable count", token));
    let mut it = s.split(',');
    let p = it.next().unwrap_or("");
    let p: usize = p.trim().parse().map_err(|_| bad(p))?;
    let q = match it.next() {
        Some(q) => q.trim().parse().map_err(|_| bad(q))?,
        None => 0,
    };
    if it.next().is_some() {
        return Err(bad(s));
    }
    Ok((p, q))
}

fn report(command: String, payload: Value, text: String, checks: Tally, show_counters: bool) -> RunReport {
    RunReport {
        command,
        elapsed_ms: 0,
        payload,
        text,
        checks,
        show_counters,
    }
}

fn timed(f: impl FnOnce() -> Result<RunReport, CliError>) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let mut r = f()?;
    r.elapsed_ms = start.elapsed().as_millis();
    Ok(r)
}

pub fn cmd_rectify(seq: &str) -> Result<RunReport, CliError> {
    let seq = parse_sequence(seq)?;
    timed(|| {
        let staircase = staircase_straighten(&seq)?;
        let exchange = row_exchange_straighten(&seq)?;
        let mut checks = Tally::new();
        checks.record(staircase == exchange, || {
            format!("staircase {} but row exchange {}", staircase, exchange)
        });
        Ok(report(
            format!("rectify {}", seq),
            straightening_to_json(&staircase),
            staircase.to_string(),
            checks,
            false,
        ))
    })
}

pub fn cmd_perp(i: usize, alpha: &str) -> Result<RunReport, CliError> {
    let alpha = parse_partition(alpha)?;
    if i == 0 {
        return Err(CliError::Parse("--i must be at least 1".into()));
    }
    timed(|| {
        let by_straightening = p_perp(i, &alpha)?;
        let by_strips = murnaghan_nakayama_perp(i, &alpha)?;
        let mut checks = Tally::new();
        checks.record(by_straightening == by_strips, || {
            format!("straightening {} but border strips {}", by_straightening, by_strips)
        });
        Ok(report(
            format!("perp --i {} --alpha {}", i, alpha),
            expansion_to_json(&by_straightening),
            by_straightening.to_string(),
            checks,
            false,
        ))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexMethod {
    Lhs,
    Rhs,
    Lemma,
    All,
}

impl VertexMethod {
    pub fn name(self) -> &'static str {
        match self {
            VertexMethod::Lhs => "lhs",
            VertexMethod::Rhs => "rhs",
            VertexMethod::Lemma => "lemma",
            VertexMethod::All => "all",
        }
    }
}

fn series_text(out: &mut String, s: &VertexSeries) {
    for (n, e) in s.iter() {
        writeln!(out, "t^{}: {}", n, e).unwrap();
    }
}

pub fn cmd_vertex(alpha: &str, window: &str, method: VertexMethod) -> Result<RunReport, CliError> {
    let alpha = parse_partition(alpha)?;
    let (lo, hi) = parse_window(window)?;
    timed(|| {
        let mut computed: Vec<(&str, VertexSeries)> = Vec::new();
        if matches!(method, VertexMethod::Lhs | VertexMethod::All) {
            computed.push(("lhs", vertex_lhs(&alpha, lo, hi)?));
        }
        if matches!(method, VertexMethod::Lemma | VertexMethod::All) {
            computed.push(("lemma", vertex_lemma(&alpha, lo, hi)?));
        }
        if matches!(method, VertexMethod::Rhs | VertexMethod::All) {
            computed.push(("rhs", vertex_rhs(&alpha, lo, hi)?));
        }
        let mut checks = Tally::new();
        let (first_name, first) = &computed[0];
        for (name, other) in &computed[1..] {
            let diff = first.first_difference(other);
            checks.record(diff.is_none(), || {
                let n = diff.unwrap();
                format!(
                    "n={}: {} {} but {} {}",
                    n,
                    first_name,
                    first.coefficient(n).unwrap(),
                    name,
                    other.coefficient(n).unwrap()
                )
            });
        }
        let mut text = String::new();
        let mut payload = serde_json::Map::new();
        for (name, s) in &computed {
            if computed.len() > 1 {
                writeln!(text, "[{}]", name).unwrap();
            }
            series_text(&mut text, s);
            payload.insert(name.to_string(), series_to_json(s));
        }
        Ok(report(
            format!("vertex --alpha {} --n {}:{} --method {}", alpha, lo, hi, method.name()),
            Value::Object(payload),
            text,
            checks,
            false,
        ))
    })
}

pub fn cmd_involution(alpha: &str, n: i64) -> Result<RunReport, CliError> {
    let alpha = parse_partition(alpha)?;
    timed(|| {
        let mut checks = Tally::new();
        let command = format!("involution --alpha {} --n {}", alpha, n);
        let r = match involution_report(&alpha, n) {
            Ok(r) => r,
            Err(e @ schur_vertex_core::Error::Verification(_))
            | Err(e @ schur_vertex_core::Error::InvalidTerm { .. }) => {
                checks.record(false, || e.to_string());
                return Ok(report(command, Value::Null, String::new(), checks, false));
            }
            Err(e) => return Err(e.into()),
        };
        checks.record(true, String::new);
        let mut text = String::new();
        writeln!(text, "couples: {}", r.couples.len()).unwrap();
        for c in &r.couples {
            writeln!(text, "  {} <-> {} at {}", c.first, c.second, c.corner).unwrap();
        }
        writeln!(text, "survivors: {}", r.survivor_expansion()).unwrap();
        match &r.lemma {
            Some(l) => writeln!(
                text,
                "lemma: k={} ht={} {}s{}",
                l.k, l.ht, l.sign, l.mu
            )
            .unwrap(),
            None => writeln!(text, "lemma: none").unwrap(),
        }
        let mut payload = involution_to_json(&r);
        payload["corners"] = Value::Array(r.couples.iter().map(|c| cell_to_json(c.corner)).collect());
        payload["survivor_expansion"] = expansion_to_json(&r.survivor_expansion());
        Ok(report(command, payload, text, checks, false))
    })
}

pub fn cmd_gamma1(alpha: &str, max_degree: usize) -> Result<RunReport, CliError> {
    let alpha = parse_partition(alpha)?;
    timed(|| {
        let g = gamma_one(&alpha, max_degree)?;
        let mut text = String::new();
        let mut pieces = Vec::new();
        for d in 0..=max_degree {
            let piece = g.degree(d);
            writeln!(text, "degree {}: {}", d, piece).unwrap();
            pieces.push(json!({"degree": d, "terms": expansion_to_json(&piece)}));
        }
        Ok(report(
            format!("gamma1 --alpha {} --max-degree {}", alpha, max_degree),
            Value::Array(pieces),
            text,
            Tally::new(),
            false,
        ))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    StraightenAgree,
    Vertex3Way,
    InvolutionSound,
    PerpAgree,
    Gamma1,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::StraightenAgree => "straighten-agree",
            Suite::Vertex3Way => "vertex-3way",
            Suite::InvolutionSound => "involution-sound",
            Suite::PerpAgree => "perp-agree",
            Suite::Gamma1 => "gamma1",
        }
    }
}

/// Runs `suite` over every partition (or sequence) within the bounds.
///
/// `perp-agree` uses `1 ≤ i ≤ max_weight + 1`; `gamma1` checks degrees up to
/// `|α| + 5` and ignores the `n` window.
pub fn cmd_verify(suite: Suite, max_weight: usize, window: &str) -> Result<RunReport, CliError> {
    let window = parse_window(window)?;
    timed(|| {
        let alphas = partitions_up_to(max_weight);
        let tally = match suite {
            Suite::StraightenAgree => suites::straighten_agree(&suites::straighten_cases(max_weight, window)),
            Suite::Vertex3Way => suites::vertex_three_way(&alphas, |_| window),
            Suite::InvolutionSound => suites::involution_sound(&alphas, |_| window),
            Suite::PerpAgree => suites::perp_agree(&alphas, max_weight + 1),
            Suite::Gamma1 => suites::gamma1_agree(&alphas, 5),
        };
        Ok(report(
            format!(
                "verify --suite {} --max-weight {} --n-range {}:{}",
                suite.name(),
                max_weight,
                window.0,
                window.1
            ),
            json!({"suite": suite.name()}),
            String::new(),
            tally,
            true,
        ))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    JtVsSsyt,
    SchurDiff,
    Cauchy,
    DualCauchy,
    SigmaAdd,
    NegAlphabet,
    VertexMonomial,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::JtVsSsyt => "jt-vs-ssyt",
            Check::SchurDiff => "schur-diff",
            Check::Cauchy => "cauchy",
            Check::DualCauchy => "dual-cauchy",
            Check::SigmaAdd => "sigma-add",
            Check::NegAlphabet => "neg-alphabet",
            Check::VertexMonomial => "vertex-monomial",
        }
    }
}

/// Runs one monomial-level comparison. `--vars p,q` is read as
/// `(positives, negatives)`, `(x-count, y-count)` for the kernels, and
/// `(p1, p2)` for `sigma-add`.
pub fn cmd_oracle(check: Check, vars: &str, max_degree: usize) -> Result<RunReport, CliError> {
    let (p, q) = parse_vars(vars)?;
    let needs_q = matches!(check, Check::Cauchy | Check::DualCauchy);
    if needs_q && (p == 0 || q == 0) {
        return Err(CliError::Parse(format!("{} needs --vars p,q with p, q >= 1", check.name())));
    }
    if matches!(check, Check::NegAlphabet | Check::VertexMonomial) && q != 0 {
        return Err(CliError::Parse(format!("{} takes a single variable count", check.name())));
    }
    timed(|| {
        let spec = AlphabetSpec::new(p, q);
        let tally = match check {
            Check::JtVsSsyt => suites::jt_vs_ssyt(&suites::jt_cases(max_degree), spec),
            Check::SchurDiff => suites::schur_diff(spec, max_degree),
            Check::Cauchy => suites::cauchy(p, q, max_degree),
            Check::DualCauchy => suites::dual_cauchy(p, q),
            Check::SigmaAdd => suites::sigma_add(p, q, max_degree),
            Check::NegAlphabet => suites::neg_alphabet(p, max_degree),
            Check::VertexMonomial => suites::vertex_monomial(p, max_degree),
        };
        let vars = if q == 0 && !needs_q {
            p.to_string()
        } else {
            format!("{},{}", p, q)
        };
        Ok(report(
            format!("oracle --check {} --vars {} --max-degree {}", check.name(), vars, max_degree),
            json!({"check": check.name()}),
            String::new(),
            tally,
            true,
        ))
    })
}
