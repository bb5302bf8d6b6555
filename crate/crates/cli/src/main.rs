//! `doset`: command-line front end for the doset-hibi library.
//!
//! Exit codes: 0 success or positive verdict, 1 negative verdict, 2 input
//! error, 3 internal assertion failure.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use doset_hibi::determinantal::{all_gammas, GammaTuple, Group, Schubert};
use doset_hibi::gorenstein::{gorenstein_criterion, gorenstein_oracle};
use doset_hibi::sagbi::verify_lm_lemmas;
use doset_hibi::semigroup::{HibiRing, Semigroup};
use doset_hibi::{DistributiveLattice, Error, Poset, PosetJson};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "doset", version, about = "Hibi rings, doset Hibi rings and their Gorenstein property")]
struct Cli {
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Poset files.
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Distributive lattices.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Hibi rings and doset Hibi rings.
    #[command(subcommand)]
    Hibi(HibiCmd),
    /// The Gorenstein criterion.
    #[command(subcommand)]
    Gorenstein(GorensteinCmd),
    /// Schubert data (m, n, γ).
    #[command(subcommand)]
    Schubert(SchubertCmd),
    /// Leading-monomial lemmas.
    #[command(subcommand)]
    Sagbi(SagbiCmd),
}

#[derive(Subcommand)]
enum PosetCmd {
    /// Validate a poset file and print basic invariants.
    Check {
        file: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Join-irreducibles of a lattice and a Birkhoff round trip.
    Birkhoff {
        file: PathBuf,
        /// Read FILE as a poset P and use J(P) ∖ {∅}.
        #[arg(long)]
        from_poset: bool,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum HibiCmd {
    /// Hilbert function h(0..=S) of R(H) or D(H, Q).
    Hilb {
        file: PathBuf,
        #[arg(long)]
        smax: u64,
        /// Comma-separated join-irreducibles of H.
        #[arg(long, value_delimiter = ',')]
        q: Vec<String>,
        /// Read FILE as a poset P and use J(P) ∖ {∅}.
        #[arg(long)]
        from_poset: bool,
    },
}

#[derive(Subcommand)]
enum GorensteinCmd {
    /// Decide whether D(H, Q) is Gorenstein; FILE holds the poset P.
    Check {
        file: PathBuf,
        /// Comma-separated elements of Q.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        q: Vec<String>,
        /// Also run the brute-force oracle and require agreement.
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Args)]
struct Instance {
    #[arg(short)]
    m: usize,
    #[arg(short)]
    n: usize,
    /// Comma-separated entries of γ.
    #[arg(long)]
    gamma: String,
}

#[derive(Subcommand)]
enum SchubertCmd {
    /// Block verdict for the O(m) or SO(m) invariants.
    Verdict {
        #[command(flatten)]
        instance: Instance,
        #[arg(long, default_value = "O")]
        group: String,
        /// Also run the general criterion and require agreement.
        #[arg(long)]
        cross_check: bool,
    },
    /// Hasse diagram of the join-irreducibles without γ.
    Hasse {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Cross-check block verdicts against the criterion on every instance.
    Sweep {
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

#[derive(Subcommand)]
enum SagbiCmd {
    /// Check the closed forms of the leading monomials of all minors.
    Verify {
        #[command(flatten)]
        instance: Instance,
    },
}

/// A run either produces output with a verdict or fails with an exit code.
struct Output {
    json: Value,
    table: String,
    positive: bool,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(msg) => Failure::Internal(msg),
            other => Failure::Input(other.to_string()),
        }
    }
}

type Run = Result<Output, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Poset(PosetCmd::Check { file, dot }) => poset_check(&file, dot.as_deref()),
        Command::Lattice(LatticeCmd::Birkhoff {
            file,
            from_poset,
            dot,
        }) => lattice_birkhoff(&file, from_poset, dot.as_deref()),
        Command::Hibi(HibiCmd::Hilb {
            file,
            smax,
            q,
            from_poset,
        }) => hibi_hilb(&file, smax, &q, from_poset),
        Command::Gorenstein(GorensteinCmd::Check { file, q, oracle }) => {
            gorenstein_check(&file, &q, oracle)
        }
        Command::Schubert(SchubertCmd::Verdict {
            instance,
            group,
            cross_check,
        }) => schubert_verdict(&instance, &group, cross_check),
        Command::Schubert(SchubertCmd::Hasse { instance, dot }) => {
            schubert_hasse(&instance, dot.as_deref())
        }
        Command::Schubert(SchubertCmd::Sweep { max_m, max_n }) => schubert_sweep(max_m, max_n),
        Command::Sagbi(SagbiCmd::Verify { instance }) => sagbi_verify(&instance),
    };
    match result {
        Ok(out) => {
            if cli.pretty {
                print!("{}", out.table);
            } else {
                println!("{}", out.json);
            }
            ExitCode::from(if out.positive { 0 } else { 1 })
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn read_poset(path: &Path) -> Result<Poset, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let json: PosetJson = serde_json::from_str(&text)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(Poset::from_json(&json)?)
}

fn read_lattice(path: &Path, from_poset: bool) -> Result<DistributiveLattice, Failure> {
    let p = read_poset(path)?;
    Ok(if from_poset {
        DistributiveLattice::from_ideals(&p)?
    } else {
        DistributiveLattice::new(p)?
    })
}

fn write_dot(path: Option<&Path>, p: &Poset, name: &str) -> Result<(), Failure> {
    if let Some(path) = path {
        fs::write(path, p.to_dot(name))
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn parse_instance(instance: &Instance) -> Result<Schubert, Failure> {
    let gamma: GammaTuple = instance.gamma.parse()?;
    Ok(Schubert::new(instance.m, instance.n, gamma)?)
}

fn labels(p: &Poset, items: &[usize]) -> Vec<String> {
    items.iter().map(|&x| p.label(x).to_string()).collect()
}

fn poset_check(file: &Path, dot: Option<&Path>) -> Run {
    let p = read_poset(file)?;
    write_dot(dot, &p, "poset")?;
    let rank = if p.is_empty() { None } else { Some(p.rank()?) };
    let pure = if p.is_empty() { None } else { Some(p.is_pure()?) };
    let minimum = p.unique_minimal().map(|x| p.label(x).to_string());
    let json = json!({
        "elements": p.len(),
        "covers": p.covers().len(),
        "rank": rank,
        "pure": pure,
        "unique_minimal": minimum,
    });
    let table = format!(
        "elements        {}\ncovers          {}\nrank            {}\npure            {}\nunique minimal  {}\n",
        p.len(),
        p.covers().len(),
        rank.map_or("-".into(), |r| r.to_string()),
        pure.map_or("-".into(), |b| b.to_string()),
        minimum.as_deref().unwrap_or("-"),
    );
    Ok(Output {
        json,
        table,
        positive: true,
    })
}

fn lattice_birkhoff(file: &Path, from_poset: bool, dot: Option<&Path>) -> Run {
    let h = read_lattice(file, from_poset)?;
    let p = h.irreducible_poset();
    write_dot(dot, p, "join_irreducibles")?;
    for a in 0..h.len() {
        if h.psi(&h.phi(a))? != a {
            return Err(Failure::Internal(format!("Ψ(Φ({})) ≠ {}", h.label(a), h.label(a))));
        }
    }
    let mut ideals = 0;
    for ideal in p.order_ideals().into_iter().filter(|i| !i.is_empty()) {
        if h.phi(h.psi(&ideal)?) != ideal {
            return Err(Failure::Internal(format!("Φ∘Ψ fails on {:?}", labels(p, &ideal))));
        }
        ideals += 1;
    }
    if ideals != h.len() {
        return Err(Failure::Internal(format!(
            "{} ideals for {} lattice elements",
            ideals,
            h.len()
        )));
    }
    let json = json!({
        "elements": h.len(),
        "join_irreducibles": p.to_json(),
        "round_trip": true,
    });
    let mut table = format!("lattice elements   {}\njoin-irreducibles  {}\n", h.len(), p.len());
    for (x, y) in p.covers() {
        let _ = writeln!(table, "  {} < {}", p.label(x), p.label(y));
    }
    table.push_str("round trip         ok\n");
    Ok(Output {
        json,
        table,
        positive: true,
    })
}

fn hibi_hilb(file: &Path, smax: u64, q: &[String], from_poset: bool) -> Run {
    let ring = HibiRing::new(read_lattice(file, from_poset)?);
    let p = ring.poset();
    let q = p.indices_of(q)?;
    let h = ring.doset_semigroup(&q)?.hilbert_function(smax)?;
    let json = json!({ "q": labels(p, &q), "hilbert": h });
    let mut table = String::from("s  h(s)\n");
    for (s, v) in h.iter().enumerate() {
        let _ = writeln!(table, "{s:<2} {v}");
    }
    Ok(Output {
        json,
        table,
        positive: true,
    })
}

fn gorenstein_check(file: &Path, q: &[String], oracle: bool) -> Run {
    let p = read_poset(file)?;
    let q = p.indices_of(q)?;
    let report = gorenstein_criterion(&p, &q)?;
    let mut json = serde_json::to_value(report.to_json(&p, &q)?)
        .map_err(|e| Failure::Internal(e.to_string()))?;
    if oracle {
        let verdict = gorenstein_oracle(&p, &q)?;
        if verdict != report.gorenstein {
            return Err(Failure::Internal(format!(
                "criterion says {}, oracle says {verdict}",
                report.gorenstein
            )));
        }
        json["oracle"] = json!(verdict);
    }
    let mut table = format!("gorenstein  {}\n", report.gorenstein);
    if let Some(failure) = json.get("failure").filter(|f| !f.is_null()) {
        let _ = writeln!(table, "failure     {failure}");
    }
    if let Some(case) = json.get("case").filter(|c| !c.is_null()) {
        let _ = writeln!(table, "case        {}", case["case"]);
    }
    let _ = writeln!(table, "nu0         {}", json["nu0"]);
    if let Some(w) = json.get("witness").filter(|w| !w.is_null()) {
        let _ = writeln!(table, "witness     {w}");
    }
    Ok(Output {
        json,
        table,
        positive: report.gorenstein,
    })
}

fn schubert_verdict(instance: &Instance, group: &str, cross_check: bool) -> Run {
    let s = parse_instance(instance)?;
    let group: Group = group.parse()?;
    let verdict = if cross_check {
        s.cross_check(group)?.verdict
    } else {
        s.verdict(group)
    };
    let bd = s.block_decomposition();
    let json = json!({
        "m": s.m(),
        "n": s.n(),
        "gamma": s.gamma(),
        "group": group,
        "gorenstein": verdict,
        "u": bd.u,
        "blocks": bd.blocks,
        "gaps": bd.gaps,
    });
    let mut table = format!("γ = {} in {}×{}, group {group:?}\n", s.gamma(), s.m(), s.n());
    for (i, gap) in bd.gaps.iter().enumerate() {
        let _ = writeln!(table, "  χ{i} = {gap:?}");
        if let Some(block) = bd.blocks.get(i) {
            let _ = writeln!(table, "  B{} = {block:?}", i + 1);
        }
    }
    if bd.blocks.len() > bd.gaps.len() {
        let _ = writeln!(table, "  B{} = {:?}", bd.blocks.len(), bd.blocks[bd.blocks.len() - 1]);
    }
    let _ = writeln!(table, "gorenstein  {verdict}");
    Ok(Output {
        json,
        table,
        positive: verdict,
    })
}

fn schubert_hasse(instance: &Instance, dot: Option<&Path>) -> Run {
    let s = parse_instance(instance)?;
    let hasse = s.hasse_without_minimum()?;
    write_dot(dot, &hasse, &format!("P minus {}", s.gamma()))?;
    let json = json!({
        "elements": hasse.len(),
        "covers": hasse.covers().len(),
        "poset": hasse.to_json(),
    });
    let mut table = format!("elements {}\ncovers   {}\n", hasse.len(), hasse.covers().len());
    for (x, y) in hasse.covers() {
        let _ = writeln!(table, "  {} < {}", hasse.label(x), hasse.label(y));
    }
    Ok(Output {
        json,
        table,
        positive: true,
    })
}

fn schubert_sweep(max_m: usize, max_n: usize) -> Run {
    let mut instances = 0;
    let mut gorenstein = [0usize; 2];
    for m in 1..=max_m {
        for n in m..=max_n {
            for gamma in all_gammas(m, n) {
                let s = Schubert::new(m, n, gamma)?;
                for (k, group) in [Group::O, Group::SO].into_iter().enumerate() {
                    if s.cross_check(group)?.verdict {
                        gorenstein[k] += 1;
                    }
                }
                instances += 1;
            }
        }
    }
    let json = json!({
        "instances": instances,
        "disagreements": 0,
        "gorenstein_o": gorenstein[0],
        "gorenstein_so": gorenstein[1],
    });
    let table = format!(
        "instances      {instances}\ndisagreements  0\nGorenstein O   {}\nGorenstein SO  {}\n",
        gorenstein[0], gorenstein[1]
    );
    Ok(Output {
        json,
        table,
        positive: true,
    })
}

fn sagbi_verify(instance: &Instance) -> Run {
    let s = parse_instance(instance)?;
    let report = verify_lm_lemmas(s.m(), s.n(), s.gamma())?;
    let json = serde_json::to_value(&report).map_err(|e| Failure::Internal(e.to_string()))?;
    let mark = |matrix: &str| {
        if report.mismatches.iter().any(|x| x.matrix == matrix) {
            "FAIL"
        } else {
            "pass"
        }
    };
    let mut table = String::from("lemma                 minors  result\n");
    for (name, matrix, count) in [
        ("lm of Z = WU", "WU", report.wu_checked),
        ("lm of WᵀW", "WtW", report.wtw_checked),
        ("lm of ZᵀZ", "ZtZ", report.ztz_checked),
    ] {
        let _ = writeln!(table, "{name:<21} {count:>6}  {}", mark(matrix));
    }
    let identities = if report.identity_failures.is_empty() {
        "pass"
    } else {
        "FAIL"
    };
    let _ = writeln!(
        table,
        "{:<21} {:>6}  {identities}",
        "Cauchy–Binet", report.cauchy_binet_checked
    );
    let _ = writeln!(
        table,
        "{:<21} {:>6}  {identities}",
        "structural zeros", report.structural_zeros_checked
    );
    if !report.passed() {
        let detail = serde_json::to_string(&report).unwrap_or_default();
        return Err(Failure::Internal(format!("leading-monomial lemmas failed: {detail}")));
    }
    Ok(Output {
        json,
        table,
        positive: true,
    })
}
