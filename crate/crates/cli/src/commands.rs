use std::fmt::Write;

use rank2_crystal::crystal::{ball, check_normal_axioms, Moves};
use rank2_crystal::embedding::{CheckOutcome, Embedding};
use rank2_crystal::lspath::LsPath;
use rank2_crystal::multiplicity::{CountKey, Side};
use rank2_crystal::polyhedral::{HalfSeqPlus, TensorElement, DEFAULT_EXTREMALITY_DEPTH};
use rank2_crystal::{Index, OrbitIndex};
use serde::Serialize;

use crate::config::{Format, RunConfig};
use crate::error::CliError;
use crate::graph::GraphDocument;

/// Rendered output, and the name of the first failing check if any.
#[derive(Debug)]
pub struct Rendered {
    pub text: String,
    pub failure: Option<String>,
}

impl From<String> for Rendered {
    fn from(text: String) -> Self {
        Rendered {
            text,
            failure: None,
        }
    }
}

#[derive(Serialize)]
struct OrbitRow {
    m: i64,
    weight: [String; 2],
    p: String,
    /// The simple root subtracted on the way to `x_{m+1}λ`.
    next: u8,
}

/// `x_mλ` and `p_m` for `m` in `from..=to`.
pub fn orbit(config: &RunConfig, from: i64, to: i64) -> Result<Rendered, CliError> {
    let shape = config.shape()?;
    let format = config.format_or(Format::Tsv, &[Format::Tsv, Format::Json, Format::Dot])?;
    let rows: Vec<OrbitRow> = (from..=to)
        .map(|m| {
            let w = shape.orbit_weight(OrbitIndex(m));
            OrbitRow {
                m,
                weight: [w.c1().to_string(), w.c2().to_string()],
                p: shape.p(m).to_string(),
                next: Index::at(m + 1).number(),
            }
        })
        .collect();
    let text = match format {
        Format::Tsv => {
            let mut out = String::from("m\tweight\tp\tnext\n");
            for r in &rows {
                writeln!(out, "{}\t({},{})\t{}\talpha{}", r.m, r.weight[0], r.weight[1], r.p, r.next)
                    .unwrap();
            }
            out
        }
        Format::Json => serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n",
        Format::Dot => {
            let mut out = String::from("digraph orbit {\n");
            for r in &rows {
                writeln!(out, "  \"x{}\" [label=\"x{}: ({},{})\"];", r.m, r.m, r.weight[0], r.weight[1])
                    .unwrap();
            }
            for pair in rows.windows(2) {
                writeln!(
                    out,
                    "  \"x{}\" -> \"x{}\" [label=\"alpha{}\"];",
                    pair[0].m, pair[1].m, pair[0].next
                )
                .unwrap();
            }
            out.push_str("}\n");
            out
        }
    };
    Ok(text.into())
}

pub fn graph(config: &RunConfig) -> Result<Rendered, CliError> {
    let shape = config.shape()?;
    let format = config.format_or(Format::Dot, &[Format::Dot, Format::Json])?;
    let doc = GraphDocument::build(config, shape);
    Ok(match format {
        Format::Json => doc.to_json(),
        _ => doc.to_dot(),
    }
    .into())
}

#[derive(Serialize)]
struct MultRow {
    n1: i64,
    n2: i64,
    mult: String,
}

#[derive(Serialize)]
struct MultTable<'a> {
    config: &'a RunConfig,
    rows: Vec<MultRow>,
}

/// Multiplicities of `λ − n₁α₁ − n₂α₂` over a rectangle.
pub fn mult(
    config: &RunConfig,
    n1_range: (i64, i64),
    n2_range: (i64, i64),
) -> Result<Rendered, CliError> {
    let cfg = config.symmetric()?;
    let format = config.format_or(Format::Tsv, &[Format::Tsv, Format::Json])?;
    let rows: Vec<MultRow> = (n1_range.0..=n1_range.1)
        .flat_map(|n1| (n2_range.0..=n2_range.1).map(move |n2| (n1, n2)))
        .map(|(n1, n2)| MultRow {
            n1,
            n2,
            mult: cfg.multiplicity_at(n1, n2).to_string(),
        })
        .collect();
    let text = match format {
        Format::Json => {
            serde_json::to_string_pretty(&MultTable { config, rows }).expect("rows serialize") + "\n"
        }
        _ => {
            let mut out = String::from("n1\tn2\tmult\n");
            for r in &rows {
                writeln!(out, "{}\t{}\t{}", r.n1, r.n2, r.mult).unwrap();
            }
            out
        }
    };
    Ok(text.into())
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    config: &'a RunConfig,
    passed: bool,
    checks: Vec<CheckOutcome>,
}

/// One suite's verdict: how many subjects were checked and the first
/// failure, if any.
struct Tally {
    name: &'static str,
    checked: usize,
    failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            checked: 0,
            failure: None,
        }
    }

    fn note(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    fn outcome(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name.to_string(),
            passed: self.failure.is_none(),
            detail: self
                .failure
                .unwrap_or_else(|| format!("{} checked", self.checked)),
        }
    }
}

/// `Θ` with one extra entry, used to check that the harness notices.
fn corrupted(emb: &Embedding, path: &LsPath) -> TensorElement {
    let mut y = emb.theta(path);
    let top = y.plus.max_key().unwrap_or(0) + 1;
    let entries = y.plus.iter().map(|(k, v)| (k, v.clone())).chain([(top, 1.into())]);
    y.plus = HalfSeqPlus::from_entries(entries).expect("positive entries");
    y
}

/// Runs the verification suites on the ball of radius `config.depth`.
pub fn verify(config: &RunConfig, corrupt_theta: bool) -> Result<Rendered, CliError> {
    let shape = config.shape()?;
    let format = config.format_or(Format::Json, &[Format::Json, Format::Tsv])?;
    let emb = Embedding::new(shape.clone());
    let paths = ball(emb.paths(), emb.paths().straight_line(), config.depth, Moves::All)
        .unwrap_or_else(|e| match e {});

    let mut morphism = Tally::new("morphism");
    let mut sigma = Tally::new("sigma table");
    let mut image = Tally::new("image and extremality");
    for p in &paths.vertices {
        for i in Index::ALL {
            let r = if corrupt_theta {
                emb.verify_morphism_with(p, i, &|q| corrupted(&emb, q))
            } else {
                emb.verify_morphism(p, i)
            };
            morphism.note(r.passed(), || failure_detail(&r.subject, r.first_failure()));
        }
        let r = emb.sigma_cross_check(p);
        sigma.note(r.passed(), || failure_detail(&r.subject, r.first_failure()));
        let r = emb.image_check(p, DEFAULT_EXTREMALITY_DEPTH);
        image.note(r.passed(), || failure_detail(&r.subject, r.first_failure()));
    }
    let mut normal = Tally::new("normal axioms");
    match check_normal_axioms(emb.paths(), &paths.vertices) {
        Ok(count) => normal.checked = count,
        Err(e) => normal.note(false, || format!("{e:?}")),
    }
    let mut checks: Vec<CheckOutcome> = [morphism, sigma, image, normal]
        .into_iter()
        .map(Tally::outcome)
        .collect();

    if let Ok(cfg) = config.symmetric() {
        let mut counts = Tally::new("multiplicities");
        let depth = config.depth as i64;
        let crystal = cfg.crystal_counts(config.depth, Moves::LoweringOnly);
        for total in 1..=depth {
            for n1 in 1..=total {
                let n2 = total - n1;
                let key = CountKey::new(n1, n2, 1, Side::Minus).expect("valid key");
                let recursion = cfg.count_y(key);
                let brute = cfg.brute_force_y(key, total as usize + 1);
                let from_ball = crystal.get(&(n1, n2)).copied().unwrap_or(0);
                let ok = recursion == brute.into() && recursion == from_ball.into();
                counts.note(ok, || {
                    format!("({n1},{n2}): recursion {recursion}, enumeration {brute}, crystal {from_ball}")
                });
            }
        }
        checks.push(counts.outcome());
    }

    let failure = checks
        .iter()
        .find(|c| !c.passed)
        .map(|c| format!("{}: {}", c.name, c.detail));
    let text = match format {
        Format::Tsv => {
            let mut out = String::from("check\tpassed\tdetail\n");
            for c in &checks {
                writeln!(out, "{}\t{}\t{}", c.name, c.passed, c.detail).unwrap();
            }
            out
        }
        _ => {
            let report = VerifyReport {
                config,
                passed: failure.is_none(),
                checks,
            };
            serde_json::to_string_pretty(&report).expect("reports serialize") + "\n"
        }
    };
    Ok(Rendered { text, failure })
}

fn failure_detail(subject: &str, check: Option<&CheckOutcome>) -> String {
    match check {
        Some(c) => format!("{subject}: {} {}", c.name, c.detail),
        None => subject.to_string(),
    }
}

#[derive(Serialize)]
struct FRow {
    x: i64,
    f: String,
    f_by_sequence: String,
    f_prime: String,
    f_prime_by_sequence: String,
    agree: bool,
}

/// `F(x)` and `F'(−x)`, each by the closed form and by the sequence `p`.
pub fn f_table(config: &RunConfig, from: i64, to: i64) -> Result<Rendered, CliError> {
    let a = config.symmetric_parameter()?;
    let format = config.format_or(Format::Tsv, &[Format::Tsv, Format::Json])?;
    if from < 0 {
        return Err(CliError::Validation(format!("x must be nonnegative, got {from}")));
    }
    let cfg = rank2_crystal::multiplicity::SymmetricConfig::new(a)
        .map_err(|e| CliError::Validation(e.to_string()))?;
    let rows: Vec<FRow> = (from..=to)
        .map(|x| {
            let pos = x.into();
            let neg = (-x).into();
            let (f, fs) = (cfg.big_f(&pos), cfg.big_f_by_sequence(&pos));
            let (g, gs) = (cfg.big_f_prime(&neg), cfg.big_f_prime_by_sequence(&neg));
            FRow {
                x,
                agree: f == fs && g == gs && g == -&f,
                f: f.to_string(),
                f_by_sequence: fs.to_string(),
                f_prime: g.to_string(),
                f_prime_by_sequence: gs.to_string(),
            }
        })
        .collect();
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n",
        _ => {
            let mut out = String::from("x\tF\tF_seq\tF'(-x)\tF'(-x)_seq\tagree\n");
            for r in &rows {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    r.x, r.f, r.f_by_sequence, r.f_prime, r.f_prime_by_sequence, r.agree
                )
                .unwrap();
            }
            out
        }
    };
    Ok(text.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_rows() {
        let out = orbit(&RunConfig::default(), -2, 2).unwrap().text;
        let ps: Vec<&str> = out.lines().skip(1).map(|l| l.split('\t').nth(2).unwrap()).collect();
        assert_eq!(ps, ["5", "2", "1", "1", "2"]);
        let empty = orbit(&RunConfig::default(), 1, 0).unwrap().text;
        assert_eq!(empty.lines().count(), 1);
    }

    #[test]
    fn mult_rows() {
        let out = mult(&RunConfig::default(), (0, 2), (0, 2)).unwrap().text;
        assert!(out.contains("0\t0\t1\n"));
        assert!(out.contains("1\t0\t1\n"));
        assert!(out.contains("1\t1\t1\n"));
        assert!(out.contains("2\t2\t2\n"));
    }

    #[test]
    fn f_rows() {
        let out = f_table(&RunConfig::default(), 0, 5).unwrap().text;
        let fs: Vec<&str> = out.lines().skip(1).map(|l| l.split('\t').nth(1).unwrap()).collect();
        assert_eq!(fs, ["0", "2", "5", "7", "10", "13"]);
        assert!(out.lines().skip(1).all(|l| l.ends_with("true")));
        assert!(out.lines().nth(1).unwrap().starts_with("0\t0\t0\t0\t0"));
    }

    #[test]
    fn verify_and_corruption() {
        let config = RunConfig {
            depth: 3,
            ..RunConfig::default()
        };
        assert_eq!(verify(&config, false).unwrap().failure, None);
        let failure = verify(&config, true).unwrap().failure.unwrap();
        assert!(failure.starts_with("morphism"), "{failure}");
    }
}
