use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mublab_core::certifier::{self, CertifyOptions, Outcome, SearchScope, Verdict, TOOL_VERSION};
use mublab_core::covariance::{
    self, close_group, commutant_dim, sharp_covariance_check, Collineation, Tolerances,
};
use mublab_core::gf::{self, FieldSpec};
use mublab_core::groups::{
    agl_construct, frobenius_kernel, is_prime, small_order_scan, sylow_count, sylow_subgroup, GroupDump,
};
use mublab_core::mub::{construct_mub, ic_rank, verify_unbiased, MubSet};
use mublab_core::repr::{cyclic_permutation_check, kernel_eigenstructure, standard_rep, IntMatrix};
use serde::Serialize;
use serde_json::{json, Value};

const OUT_ENV: &str = "MUBLAB_OUT";
const EXHAUSTIVE_MAX_ORDER: usize = certifier::EXHAUSTIVE_HOMOMORPHISM_MAX_ORDER;
const CLOSURE_CAP: usize = 4096;

#[derive(Parser)]
#[command(name = "mublab", version, about = "Groups, representations and MUBs behind sharp covariance")]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Serialize, Clone)]
struct RunConfig {
    /// Matrix comparison tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,
    /// Ray comparison tolerance.
    #[arg(long, global = true, default_value_t = 1e-7)]
    ray_tolerance: f64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Report file; defaults to $MUBLAB_OUT/<command>.json when that is set.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(ValueEnum, Serialize, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Finite field operations.
    Gf {
        #[command(subcommand)]
        op: GfCommand,
    },
    /// Affine groups AGL(1, q).
    Group {
        #[command(subcommand)]
        op: GroupCommand,
    },
    /// The standard representation of AGL(1, q).
    Rep {
        #[command(subcommand)]
        op: RepCommand,
    },
    /// Mutually unbiased bases.
    Mub {
        #[command(subcommand)]
        op: MubCommand,
    },
    /// Collineation groups and covariance.
    Cov {
        #[command(subcommand)]
        op: CovCommand,
    },
    /// Nonexistence certificate for an odd prime dimension.
    Certify {
        #[arg(long)]
        p: u64,
        /// Fiducial-search restarts (p = 3 only).
        #[arg(long, default_value_t = 0)]
        restarts: usize,
        /// Restrict the fiducial search to the nonidentity translations.
        #[arg(long)]
        kernel_only: bool,
    },
    /// Irreducible degrees of every group of a small order.
    Scan {
        #[arg(long)]
        order: usize,
    },
}

#[derive(Subcommand)]
enum GfCommand {
    /// Exhaustive self-test of GF(q).
    Ops {
        #[arg(long)]
        q: u64,
    },
}

#[derive(Subcommand)]
enum GroupCommand {
    Build {
        #[arg(long)]
        q: u64,
        /// Also compute a Sylow subgroup for this prime and count its conjugates.
        #[arg(long)]
        sylow: Option<u64>,
        /// Also compute the Frobenius kernel of the point stabilizer.
        #[arg(long)]
        kernel: bool,
    },
}

#[derive(Subcommand)]
enum RepCommand {
    /// Homomorphism, irreducibility and translation-eigenbasis checks.
    Check {
        #[arg(long)]
        q: u64,
    },
}

#[derive(Subcommand)]
enum MubCommand {
    Build {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Rank of the MUB projectors as operators.
    Ic {
        #[arg(long)]
        d: usize,
    },
}

#[derive(Subcommand)]
enum CovCommand {
    /// Sharp covariance of the qubit MUB under the built-in order-6 group.
    QubitWitness,
    /// Sharp covariance of a MUB file under the group generated by a file of collineations.
    Check {
        #[arg(long)]
        mub: PathBuf,
        #[arg(long)]
        group: PathBuf,
    },
}

/// Bad input; exit code 2.
struct Failure(String);

struct Report {
    command: &'static str,
    passed: bool,
    summary: Vec<String>,
    body: Value,
}

impl Report {
    fn new(command: &'static str, passed: bool, body: Value) -> Self {
        Report { command, passed, summary: Vec::new(), body }
    }

    fn line(mut self, s: impl Into<String>) -> Self {
        self.summary.push(s.into());
        self
    }
}

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure(msg.to_string())
}

fn pass_word(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

/// Splits q = r^n with r prime.
fn prime_power(q: u64) -> Result<(u32, u32), Failure> {
    let r = (2..=q).find(|d| q.is_multiple_of(*d)).ok_or_else(|| usage(format!("{q} is not a prime power")))?;
    let mut rest = q;
    let mut n = 0;
    while rest.is_multiple_of(r) {
        rest /= r;
        n += 1;
    }
    if rest != 1 || q > gf::MAX_FIELD_ORDER as u64 {
        return Err(usage(format!("{q} is not a supported prime power")));
    }
    Ok((r as u32, n))
}

fn field(q: u64) -> Result<Arc<FieldSpec>, Failure> {
    let (r, n) = prime_power(q)?;
    FieldSpec::with_default_modulus(r, n).map(Arc::new).map_err(usage)
}

fn gf_ops(q: u64) -> Result<Report, Failure> {
    let spec = field(q)?;
    let st = gf::self_test(&spec);
    let ok = st.passed();
    Ok(Report::new("gf-ops", ok, to_value(&st)).line(format!("{}: self-test {}", st.field, pass_word(ok))))
}

fn group_build(q: u64, sylow: Option<u64>, kernel: bool) -> Result<Report, Failure> {
    let spec = field(q)?;
    let g = agl_construct(spec);
    let mut ok = true;
    let mut report = json!({ "group": GroupDump::new(&g) });
    let mut lines = vec![format!("{}: order {}", g.name(), g.order())];
    if let Some(p) = sylow {
        if !is_prime(p) || !(g.order() as u64).is_multiple_of(p) {
            return Err(usage(format!("{p} is not a prime dividing {}", g.order())));
        }
        let s = sylow_subgroup(&g, p).map_err(usage)?;
        let count = sylow_count(&g, p).map_err(usage)?;
        lines.push(format!("Sylow {p}-subgroup of order {}, {count} conjugates", s.order()));
        report["sylow"] = json!({ "p": p, "order": s.order(), "count": count, "elements": s });
    }
    if kernel {
        let h = g.multiplicative_subgroup().expect("affine group");
        match frobenius_kernel(&g, &h) {
            Ok(k) => {
                let translations = Some(&k) == g.translation_subgroup().as_ref();
                let elementary = g.is_elementary_abelian(&k);
                ok &= translations && elementary;
                lines.push(format!(
                    "Frobenius kernel of order {}: translations {}, elementary abelian {}",
                    k.order(),
                    pass_word(translations),
                    pass_word(elementary)
                ));
                report["kernel"] = json!({
                    "order": k.order(),
                    "equals_translations": translations,
                    "elementary_abelian": elementary,
                    "elements": k,
                });
            }
            Err(e) => {
                ok = false;
                lines.push(format!("Frobenius kernel: FAIL ({e})"));
                report["kernel"] = json!({ "error": e.to_string() });
            }
        }
    }
    Ok(Report { command: "group-build", passed: ok, summary: lines, body: report })
}

fn rep_check(q: u64, cfg: &RunConfig) -> Result<Report, Failure> {
    let spec = field(q)?;
    if spec.order() < 3 {
        return Err(usage("the standard representation needs q >= 3"));
    }
    let g = Arc::new(agl_construct(spec.clone()));
    let rep = standard_rep(g.clone()).map_err(usage)?;
    let mut checks: Vec<(String, bool, Value)> = Vec::new();

    let exhaustive = g.order() <= EXHAUSTIVE_MAX_ORDER;
    let violation = if exhaustive {
        rep.check_homomorphism_exhaustive()
    } else {
        rep.check_homomorphism_sampled(certifier::HOMOMORPHISM_SAMPLES, cfg.seed)
    };
    checks.push((
        "homomorphism".into(),
        violation.is_none(),
        json!({ "mode": if exhaustive { "exhaustive" } else { "sampled" }, "violation": violation }),
    ));

    let defect = g.elements().map(|x| rep.model_conjugacy_defect(x)).fold(0.0, f64::max);
    checks.push(("model-agreement".into(), defect <= cfg.tolerance, json!({ "max_defect": defect })));

    let irr = rep.irreducibility_sum();
    checks.push(("irreducibility-sum".into(), irr.irreducible, to_value(&irr)));

    if spec.characteristic() == 2 {
        let k = g.translation_subgroup().expect("affine group");
        match kernel_eigenstructure(&rep, &k) {
            Ok(eig) => {
                let half = spec.order() / 2;
                let mult_ok = eig.multiplicities.iter().all(|&m| m == (half - 1, half));
                checks.push(("kernel-eigenstructure".into(), mult_ok, to_value(&eig)));
                let cyc = cyclic_permutation_check(&rep, &eig, g.singer_element().expect("affine group"));
                checks.push(match cyc {
                    Ok(w) => ("cyclic-permutation".into(), w.cycle.len() == rep.degree(), to_value(&w)),
                    Err(e) => ("cyclic-permutation".into(), false, json!({ "error": e.to_string() })),
                });
            }
            Err(e) => checks.push(("kernel-eigenstructure".into(), false, json!({ "error": e.to_string() }))),
        }
        let sum = rep.kstar_sum(&k);
        let minus_id = IntMatrix::identity(rep.degree()).scale(-1);
        checks.push(("kstar-sum".into(), sum == minus_id, json!({ "equals_minus_identity": sum == minus_id })));
    }

    let passed = checks.iter().all(|c| c.1);
    let summary = std::iter::once(format!("{}: degree {}", g.name(), rep.degree()))
        .chain(checks.iter().map(|(n, ok, _)| format!("{n}: {}", pass_word(*ok))))
        .collect();
    let body = json!({
        "group": g.name(),
        "degree": rep.degree(),
        "checks": checks
            .iter()
            .map(|(n, ok, w)| json!({ "name": n, "outcome": if *ok { "pass" } else { "fail" }, "witness": w }))
            .collect::<Vec<_>>(),
    });
    Ok(Report { command: "rep-check", passed, summary, body })
}

fn mub_build(d: usize, verify: bool, cfg: &RunConfig) -> Result<Report, Failure> {
    let mub = construct_mub(d).map_err(usage)?;
    let mut body = json!({ "dim": d, "mub": mub });
    let mut report = Report::new("mub-build", true, Value::Null).line(format!("built {} bases in dimension {d}", d + 1));
    if verify {
        let v = verify_unbiased(&mub, cfg.tolerance);
        report.passed = v.pass;
        report = report.line(format!(
            "unbiasedness {}: orthonormality defect {:.3e}, overlap defect {:.3e}",
            pass_word(v.pass),
            v.orthonormality_defect,
            v.overlap_defect
        ));
        body["verification"] = to_value(&v);
    }
    report.body = body;
    Ok(report)
}

fn mub_ic(d: usize) -> Result<Report, Failure> {
    let mub = construct_mub(d).map_err(usage)?;
    let rank = ic_rank(&mub);
    let povm = mub.povm();
    let completeness = povm.completeness_defect();
    let ok = rank == d * d && completeness <= 1e-9;
    Ok(Report::new(
        "mub-ic",
        ok,
        json!({ "dim": d, "rank": rank, "expected": d * d, "completeness_defect": completeness }),
    )
    .line(format!("rank {rank} of {}: {}", d * d, pass_word(ok))))
}

fn covariance_report(command: &'static str, mub: &MubSet, group: &[Collineation], cfg: &RunConfig) -> Result<Report, Failure> {
    let tol = Tolerances { matrix: cfg.tolerance, ray: cfg.ray_tolerance };
    let verdict = sharp_covariance_check(mub, group, tol).map_err(usage)?;
    let commutant = commutant_dim(group);
    let mut report = Report::new(
        command,
        verdict.pass,
        json!({ "group": group, "verdict": verdict, "commutant_dim": commutant }),
    )
    .line(format!(
        "group order {} (expected {}), commutant dimension {commutant}",
        verdict.group_order, verdict.expected_order
    ))
    .line(format!("sharp covariance: {}", pass_word(verdict.pass)));
    for r in &verdict.reasons {
        report = report.line(format!("  {r}"));
    }
    Ok(report)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn cov_check(mub: &Path, group: &Path, cfg: &RunConfig) -> Result<Report, Failure> {
    let mub: MubSet = read_json(mub)?;
    let gens: Vec<Collineation> = read_json(group)?;
    if let Some(bad) = gens.iter().position(|g| g.unitarity_defect() > cfg.tolerance) {
        return Err(usage(format!("collineation {bad} is not unitary")));
    }
    let closed = close_group(&gens, CLOSURE_CAP, cfg.tolerance).map_err(usage)?;
    covariance_report("cov-check", &mub, &closed, cfg)
}

fn certify(p: u64, restarts: usize, kernel_only: bool, cfg: &RunConfig) -> Result<Report, Failure> {
    let opts = CertifyOptions {
        restarts,
        seed: cfg.seed,
        scope: if kernel_only { SearchScope::KernelOnly } else { SearchScope::FullGroup },
    };
    let r = certifier::certify(p, &opts).map_err(usage)?;
    let passed = r.verdict == Verdict::Nonexistent && r.all_passed();
    let mut report = Report::new("certify", passed, to_value(&r));
    for c in &r.checks {
        report = report.line(format!("{}: {}", c.name, pass_word(c.outcome == Outcome::Pass)));
    }
    let verdict = if r.verdict == Verdict::Nonexistent { "NONEXISTENT" } else { "INCONCLUSIVE" };
    Ok(report.line(format!("p = {p}: {verdict}")))
}

fn scan(order: usize, cfg: &RunConfig) -> Result<Report, Failure> {
    let r = small_order_scan(order, cfg.seed).map_err(usage)?;
    let mut report = Report::new("scan", true, to_value(&r));
    for e in &r.entries {
        report = report.line(format!("{}: degrees {:?}", e.name, e.degrees));
    }
    if let Some(p) = r.p {
        report = report.line(format!("faithful degree {p}: {:?}", r.groups_with_faithful_degree_p()));
    }
    Ok(report)
}

fn dispatch(cli: &Cli) -> Result<Report, Failure> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Gf { op: GfCommand::Ops { q } } => gf_ops(*q),
        Command::Group { op: GroupCommand::Build { q, sylow, kernel } } => group_build(*q, *sylow, *kernel),
        Command::Rep { op: RepCommand::Check { q } } => rep_check(*q, cfg),
        Command::Mub { op: MubCommand::Build { d, verify } } => mub_build(*d, *verify, cfg),
        Command::Mub { op: MubCommand::Ic { d } } => mub_ic(*d),
        Command::Cov { op: CovCommand::QubitWitness } => {
            let mub = construct_mub(2).map_err(usage)?;
            covariance_report("cov-qubit-witness", &mub, &covariance::qubit_order6_witness(), cfg)
        }
        Command::Cov { op: CovCommand::Check { mub, group } } => cov_check(mub, group, cfg),
        Command::Certify { p, restarts, kernel_only } => certify(*p, *restarts, *kernel_only, cfg),
        Command::Scan { order } => scan(*order, cfg),
    }
}

fn output_path(cfg: &RunConfig, command: &str) -> Option<PathBuf> {
    cfg.output.clone().or_else(|| {
        std::env::var_os(OUT_ENV)
            .filter(|v| !v.is_empty())
            .map(|dir| PathBuf::from(dir).join(format!("{command}.json")))
    })
}

fn emit(report: &Report, cfg: &RunConfig) -> Result<(), String> {
    let envelope = json!({
        "command": report.command,
        "tool_version": TOOL_VERSION,
        "config": cfg,
        "passed": report.passed,
        "report": report.body,
    });
    let text = serde_json::to_string_pretty(&envelope).map_err(|e| e.to_string())?;
    if let Some(path) = output_path(cfg, report.command) {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
        }
        fs::write(&path, format!("{text}\n")).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    match cfg.format {
        Format::Json => println!("{text}"),
        Format::Text => {
            for line in &report.summary {
                println!("{line}");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = &cli.config;
    if !(cfg.tolerance > 0.0 && cfg.ray_tolerance > 0.0) {
        eprintln!("error: tolerances must be positive");
        return ExitCode::from(2);
    }
    match dispatch(&cli) {
        Ok(report) => {
            if let Err(e) = emit(&report, cfg) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(2).ok(), Some((2, 1)));
        assert_eq!(prime_power(128).ok(), Some((2, 7)));
        assert_eq!(prime_power(81).ok(), Some((3, 4)));
        for bad in [0, 1, 6, 12, 100] {
            assert!(prime_power(bad).is_err(), "{bad}");
        }
    }
}
