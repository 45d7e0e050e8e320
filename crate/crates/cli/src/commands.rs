use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use braid_dcp::centralizer::centralizer_generators;
use braid_dcp::dcp::{solve_dcp, verify_solution, DcpInstance, DcpOutcome};
use braid_dcp::oracle::{brute_conjugator, brute_dcp, brute_double_centralizer, brute_membership, BruteOutcome};
use braid_dcp::parabolic::{decompose_center_times_parabolic, tau, Interval, ParabolicSpec};
use braid_dcp::simconj::{
    solve_conjugacy, solve_simultaneous_conjugacy, verify_conjugator, ConjOutcome, ConjTuple, SearchOptions,
};
use braid_dcp::strands::{crossing_matrix, crossing_number};
use braid_dcp::{equal, permutation_of, BraidWord, NormalForm};

use crate::args::{Block, Cli, Command, OracleCommand};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Yes,
    No,
    Inconclusive,
    Error,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Ok => "OK",
            Status::Yes => "YES",
            Status::No => "NO",
            Status::Inconclusive => "INCONCLUSIVE",
            Status::Error => "ERROR",
        }
    }

    pub fn exit_code(self) -> ExitCode {
        ExitCode::from(match self {
            Status::Ok | Status::Yes => 0,
            Status::No => 1,
            Status::Inconclusive => 2,
            Status::Error => 3,
        })
    }
}

pub struct Report {
    pub status: Status,
    pub text: String,
    pub payload: Value,
}

impl Report {
    fn new(status: Status, text: impl Into<String>, payload: Value) -> Self {
        Report { status, text: text.into(), payload }
    }

    fn decision(yes: bool, text: impl Into<String>, payload: Value) -> Self {
        Report::new(if yes { Status::Yes } else { Status::No }, text, payload)
    }

    pub fn error(err: &anyhow::Error) -> Self {
        Report::new(Status::Error, format!("ERROR {err:#}"), json!({ "message": format!("{err:#}") }))
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut record = json!({ "status": self.status.label() });
            if let (Value::Object(out), Value::Object(extra)) = (&mut record, &self.payload) {
                out.extend(extra.clone());
            }
            record.to_string()
        } else {
            self.text.clone()
        }
    }
}

fn word(text: &str, n: usize) -> Result<BraidWord> {
    BraidWord::parse(text, n).with_context(|| format!("cannot parse braid word `{text}`"))
}

fn interval(block: &Block, n: usize) -> Result<Interval> {
    Ok(Interval::new(block.interval[0], block.interval[1], n)?)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

/// First line `n`, then one component per line; `e` is the identity.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_tuple(text: &str) -> Result<ConjTuple> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let first = lines.next().context("empty tuple file")?;
    let n: usize = first.parse().with_context(|| format!("bad strand count `{first}`"))?;
    let comps =
        lines.map(|l| if l == "e" { Ok(BraidWord::identity(n)) } else { word(l, n) }).collect::<Result<Vec<_>>>()?;
    Ok(ConjTuple::new(comps)?)
}

fn conj_report(outcome: ConjOutcome, check: impl Fn(&BraidWord) -> bool) -> Result<Report> {
    Ok(match outcome {
        ConjOutcome::Found(x) => {
            if !check(&x) {
                bail!("conjugator {x} failed verification");
            }
            Report::new(Status::Yes, format!("YES x=\"{x}\""), json!({ "conjugator": x.to_string() }))
        }
        ConjOutcome::NoSolution => Report::new(Status::No, "NO", json!({})),
        ConjOutcome::Inconclusive { budget } => {
            Report::new(Status::Inconclusive, "INCONCLUSIVE(budget)", json!({ "budget": budget }))
        }
    })
}

fn brute_report<W>(outcome: BruteOutcome<W>, show: impl Fn(&W) -> (String, Value)) -> Report {
    match outcome {
        BruteOutcome::Yes(w) => {
            let (text, payload) = show(&w);
            Report::new(Status::Yes, format!("YES {text}"), payload)
        }
        BruteOutcome::NoWithin(len) => Report::new(
            Status::No,
            format!("NO (none within length {len})"),
            json!({ "bounded": true, "max_len": len }),
        ),
    }
}

pub fn run(cli: &Cli) -> Result<Report> {
    let opts = SearchOptions { budget: cli.budget, threads: cli.threads.max(1) };
    match &cli.command {
        Command::Nf { strands, word: w } => {
            let u = word(w, strands.n)?;
            let nf = NormalForm::of_word(&u);
            let factors: Vec<String> = nf.factors().iter().map(|f| f.to_word().to_string()).collect();
            let text = format!(
                "delta_power {}\nfactors {}\ninf {} sup {} length {}\nnormal form {}",
                nf.delta_power(),
                if factors.is_empty() {
                    "(none)".to_string()
                } else {
                    factors.iter().map(|f| format!("[{f}]")).collect::<Vec<_>>().join(" ")
                },
                nf.inf(),
                nf.sup(),
                nf.canonical_length(),
                nf
            );
            Ok(Report::new(
                Status::Ok,
                text,
                json!({ "delta_power": nf.delta_power(), "factors": factors, "inf": nf.inf(), "sup": nf.sup(),
                        "canonical_length": nf.canonical_length(), "word": nf.to_word().to_string() }),
            ))
        }
        Command::Eq { strands, u, v } => {
            let same = equal(&word(u, strands.n)?, &word(v, strands.n)?)?;
            Ok(Report::decision(same, if same { "YES" } else { "NO" }, json!({ "equal": same })))
        }
        Command::Perm { strands, word: w } => {
            let p = permutation_of(&word(w, strands.n)?);
            Ok(Report::new(Status::Ok, p.to_string(), json!({ "permutation": p.images() })))
        }
        Command::Cross { strands, pair, word: w } => {
            let u = word(w, strands.n)?;
            match pair {
                Some(p) => {
                    let c = crossing_number(&u, p[0], p[1])?;
                    Ok(Report::new(Status::Ok, c.to_string(), json!({ "i": p[0], "j": p[1], "crossing": c })))
                }
                None => {
                    let m = crossing_matrix(&u);
                    let text = m
                        .iter()
                        .map(|row| row.iter().map(|c| format!("{c:>3}")).collect::<String>())
                        .collect::<Vec<_>>()
                        .join("\n");
                    Ok(Report::new(Status::Ok, text, json!({ "matrix": m })))
                }
            }
        }
        Command::Tau { strands, p, q } => {
            let t = tau(*p, *q, strands.n)?;
            let perm = permutation_of(&t);
            Ok(Report::new(
                Status::Ok,
                format!("{t}\npermutation {perm}"),
                json!({ "word": t.to_string(), "permutation": perm.images() }),
            ))
        }
        Command::Member { strands, block, alpha, center, word: w } => {
            let n = strands.n;
            let u = word(w, n)?;
            let iv = interval(block, n)?;
            if *center {
                if !iv.is_proper(n) {
                    bail!("--center needs a proper block, got B_{iv} in B_{n}");
                }
                return Ok(match decompose_center_times_parabolic(&u, iv) {
                    Ok((q, h)) => {
                        Report::new(Status::Yes, format!("YES q={q} h=\"{h}\""), json!({ "q": q, "h": h.to_string() }))
                    }
                    Err(_) => Report::new(Status::No, "NO", json!({})),
                });
            }
            let spec = ParabolicSpec::new(n, word(alpha, n)?, iv)?;
            let inside = spec.contains(&u)?;
            Ok(Report::decision(inside, if inside { "YES" } else { "NO" }, json!({ "member": inside })))
        }
        Command::Centralizer { strands, block } => {
            let c = centralizer_generators(strands.n, interval(block, strands.n)?)?;
            let gens: Vec<String> = c.gens.iter().map(ToString::to_string).collect();
            Ok(Report::new(Status::Ok, gens.join("\n"), json!({ "generators": gens })))
        }
        Command::Conj { strands, u, v } => {
            let (u, v) = (word(u, strands.n)?, word(v, strands.n)?);
            let s = ConjTuple::new(vec![u.clone()])?;
            let t = ConjTuple::new(vec![v.clone()])?;
            conj_report(solve_conjugacy(&u, &v, opts)?, |x| verify_conjugator(&s, &t, x))
        }
        Command::Simconj { s, t } => {
            let s = parse_tuple(&read(s)?)?;
            let t = parse_tuple(&read(t)?)?;
            conj_report(solve_simultaneous_conjugacy(&s, &t, opts)?, |x| verify_conjugator(&s, &t, x))
        }
        Command::Dcp { instance } => {
            let inst: DcpInstance = read(instance)?.parse()?;
            match solve_dcp(&inst, opts)? {
                DcpOutcome::Yes(sol) => {
                    if !verify_solution(&inst, &sol.a, &sol.b)? {
                        bail!("witness a=\"{}\" b=\"{}\" failed verification", sol.a, sol.b);
                    }
                    let text = format!("YES a=\"{}\" b=\"{}\"", sol.a, sol.b);
                    Ok(Report::new(Status::Yes, text, json!({ "solution": sol })))
                }
                DcpOutcome::No(cert) => Ok(Report::new(Status::No, "NO", json!({ "certificate": cert }))),
                DcpOutcome::Inconclusive { budget } => {
                    Ok(Report::new(Status::Inconclusive, "INCONCLUSIVE", json!({ "budget": budget })))
                }
            }
        }
        Command::Oracle(cmd) => run_oracle(cmd, cli.budget),
    }
}

fn run_oracle(cmd: &OracleCommand, budget: usize) -> Result<Report> {
    match cmd {
        OracleCommand::Dcp { instance, max_len } => {
            let inst: DcpInstance = read(instance)?.parse()?;
            let out = brute_dcp(&inst.a, &inst.b, &inst.g, &inst.g_prime, *max_len, budget)?;
            Ok(brute_report(out, |(a, b)| {
                (format!("a=\"{a}\" b=\"{b}\""), json!({ "a": a.to_string(), "b": b.to_string() }))
            }))
        }
        OracleCommand::Conj { strands, max_len, u, v } => {
            let out = brute_conjugator(&word(u, strands.n)?, &word(v, strands.n)?, *max_len, budget)?;
            Ok(brute_report(out, |x| (format!("x=\"{x}\""), json!({ "conjugator": x.to_string() }))))
        }
        OracleCommand::Member { strands, block, max_len, word: w } => {
            let n = strands.n;
            let gens = interval(block, n)?.generators(n);
            let out = brute_membership(&word(w, n)?, &gens, *max_len, budget)?;
            Ok(brute_report(out, |x| (format!("w=\"{x}\""), json!({ "word": x.to_string() }))))
        }
        OracleCommand::DoubleCentralizer { strands, block, samples, max_len, seed } => {
            let n = strands.n;
            let r = brute_double_centralizer(n, interval(block, n)?, *samples, *max_len, *seed)?;
            let clean = r.violations.is_empty() && r.non_commuting_members.is_empty();
            let mut text = format!(
                "samples {} commuting {} violations {} non-commuting members {}",
                r.samples,
                r.commuting,
                r.violations.len(),
                r.non_commuting_members.len()
            );
            for v in r.violations.iter().chain(&r.non_commuting_members) {
                text.push_str(&format!("\n  {v}"));
            }
            Ok(Report::new(if clean { Status::Ok } else { Status::No }, text, json!({ "report": r })))
        }
    }
}
