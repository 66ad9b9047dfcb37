//! Command-line interface: scenario verification, invariant-theory
//! queries, fixed points and orbits, curve singularity analysis, the
//! general-position test and the integer surface ledgers.

use clap::{Args, Parser, Subcommand};
use k3verify::catalog::{BuiltCatalog, Catalog};
use k3verify::curvegeom::elimination::singular_points;
use k3verify::curvegeom::{general_position, is_singular_at, node_or_cusp, PlaneCurve};
use k3verify::cyclo::{parse_cyclo, set_max_conductor, CycloNum};
use k3verify::invariants::{invariant_basis, molien_dimension, Character};
use k3verify::matgroup::{fixed_points, FixedComponent, PointP};
use k3verify::polyring::Grading;
use k3verify::report::Report;
use k3verify::scenario::{list_scenarios, run_scenario};
use k3verify::surfledger;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "k3verify",
    about = "Exact verification of finite projective symmetry computations",
    version
)]
struct Cli {
    /// Maximum supported cyclotomic conductor.
    #[arg(long, global = true, default_value_t = 120)]
    max_conductor: u32,
    /// Additional catalog file (group/curve documents) to load.
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one scenario, or all of them.
    Verify(VerifyArgs),
    /// List the bundled scenarios.
    ListScenarios,
    /// Dimension of a (semi-)invariant space by trace averaging.
    Molien(SpaceArgs),
    /// Canonical basis of a (semi-)invariant space.
    InvariantBasis(SpaceArgs),
    /// Fixed locus of a group element given as a word in the generators.
    FixedPoints {
        #[arg(long)]
        group: String,
        #[arg(long)]
        element: String,
    },
    /// Orbit of a point under a catalog group.
    Orbit {
        #[arg(long)]
        group: String,
        /// Comma-separated coordinates in the cyclotomic grammar.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Singular locus of a curve (bundled name or a catalog file).
    Singular {
        /// Name of a bundled curve, or a path to a file containing a
        /// curve document.
        #[arg(long)]
        curve: String,
        /// Only test singularity at this point.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// General-position test for a file with one point per line.
    GeneralPosition { points_file: PathBuf },
    /// Integer surface ledgers.
    #[command(subcommand)]
    Ledger(LedgerCommand),
}

#[derive(Args)]
struct VerifyArgs {
    /// Scenario name; omit with --all.
    scenario: Option<String>,
    #[arg(long)]
    all: bool,
    /// Run scenarios on worker threads (reports stay in registry order).
    #[arg(long)]
    parallel: bool,
    /// Write the JSON reports to this path.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct SpaceArgs {
    #[arg(long)]
    group: String,
    #[arg(long)]
    degree: Option<u32>,
    /// Bidegree "A,B" for product ambients.
    #[arg(long)]
    bidegree: Option<String>,
    /// Character: "trivial", "det", generator assignments
    /// "gen=expr,gen=expr,...", or a path to a file holding them.
    #[arg(long, default_value = "trivial")]
    character: String,
}

#[derive(Subcommand)]
enum LedgerCommand {
    /// e(cover) = 2 e(quotient) - sum of branch Euler numbers.
    Cover {
        #[arg(long, allow_negative_numbers = true)]
        ey: i64,
        /// Comma-separated branch curve Euler numbers.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        branch: String,
    },
    /// Check 13 - g = e_min + m - n (or 12 without a genus).
    Mori {
        #[arg(long, allow_negative_numbers = true)]
        g: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, allow_negative_numbers = true)]
        emin: i64,
    },
    /// Self-intersection after contracting fibers.
    Blowdown {
        #[arg(long, allow_negative_numbers = true)]
        bsq: i64,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        mults: String,
    },
    /// Branch-curve self-intersection doubling.
    BranchDouble {
        #[arg(long, allow_negative_numbers = true)]
        csq: i64,
    },
    /// Genus by adjunction.
    Adjunction {
        #[arg(long, allow_negative_numbers = true)]
        kc: i64,
        #[arg(long, allow_negative_numbers = true)]
        csq: i64,
    },
    /// Fixed-point count of a symplectic automorphism by order.
    Nikulin {
        #[arg(long)]
        order: u32,
    },
    /// Number of (-1)-curves on a Del Pezzo surface.
    DelpezzoLines {
        #[arg(long)]
        degree: u32,
    },
    /// Anticanonical section count h0(-rK).
    H0 {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        r: u32,
    },
    /// Euler characteristic of a branched cover.
    RiemannHurwitz {
        #[arg(long, allow_negative_numbers = true)]
        deg: i64,
        #[arg(long, allow_negative_numbers = true)]
        ebase: i64,
        #[arg(long, allow_negative_numbers = true)]
        contrib: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    set_max_conductor(cli.max_conductor);
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_catalog(extra: &Option<PathBuf>) -> Result<BuiltCatalog, String> {
    let mut cat = Catalog::bundled().map_err(|e| e.to_string())?;
    if let Some(path) = extra {
        let more = Catalog::load_path(path).map_err(|e| e.to_string())?;
        cat.groups.extend(more.groups);
        cat.curves.extend(more.curves);
    }
    cat.build_strict().map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Verify(args) => verify(args),
        Command::ListScenarios => {
            for name in list_scenarios() {
                println!("{name}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Molien(args) => {
            let cat = load_catalog(&cli.catalog)?;
            let (group, grading, chi) = space_args(&cat, &args)?;
            let dim = molien_dimension(group, grading, &chi).map_err(|e| e.to_string())?;
            println!("{dim}");
            Ok(ExitCode::SUCCESS)
        }
        Command::InvariantBasis(args) => {
            let cat = load_catalog(&cli.catalog)?;
            let (group, grading, chi) = space_args(&cat, &args)?;
            let space = invariant_basis(group, grading, &chi).map_err(|e| e.to_string())?;
            println!("dimension {}", space.dimension);
            for b in &space.basis {
                println!("{}", b.to_canonical_string());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::FixedPoints { group, element } => {
            let cat = load_catalog(&cli.catalog)?;
            let g = cat.group(&group).map_err(|e| e.to_string())?;
            let map = g.evaluate_word(&element).map_err(|e| e.to_string())?;
            let comps = fixed_points(&map, 10_000).map_err(|e| e.to_string())?;
            for comp in comps {
                match comp {
                    FixedComponent::Point(p) => println!("point {p}"),
                    FixedComponent::Subspace(basis) => {
                        println!("pointwise-fixed subspace of dimension {}", basis.len() - 1);
                        for v in basis {
                            let coords: Vec<String> =
                                v.iter().map(|c| c.to_canonical_string()).collect();
                            println!("  basis [{}]", coords.join(", "));
                        }
                    }
                    FixedComponent::Product { z, w } => {
                        let show = |side: Option<[CycloNum; 2]>| match side {
                            None => "whole line".to_string(),
                            Some([a, b]) => format!(
                                "[{}:{}]",
                                a.to_canonical_string(),
                                b.to_canonical_string()
                            ),
                        };
                        println!("product locus: z {} x w {}", show(z), show(w));
                    }
                    FixedComponent::SwapGraph { q } => {
                        println!("fixed curve {{(v, Qv)}} with Q =");
                        for r in 0..2 {
                            println!(
                                "  [{}, {}]",
                                q.at(r, 0).to_canonical_string(),
                                q.at(r, 1).to_canonical_string()
                            );
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Orbit { group, point } => {
            let cat = load_catalog(&cli.catalog)?;
            let g = cat.group(&group).map_err(|e| e.to_string())?;
            let p = parse_point(&point, g.ambient())?;
            let orbit = g.orbit_point(&p).map_err(|e| e.to_string())?;
            println!("orbit length {}", orbit.len());
            for q in orbit {
                println!("{q}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Singular { curve, at } => {
            let cat = load_catalog(&cli.catalog)?;
            let poly = if let Ok(p) = cat.curve(&curve) {
                p.clone()
            } else {
                let extra =
                    Catalog::load_path(&PathBuf::from(&curve)).map_err(|e| e.to_string())?;
                extra
                    .curves
                    .first()
                    .ok_or_else(|| format!("no curve document in {curve}"))?
                    .poly
                    .clone()
            };
            let plane = PlaneCurve::new(poly).map_err(|e| e.to_string())?;
            if let Some(at) = at {
                let p = parse_point(&at, plane.ambient())?;
                let singular = is_singular_at(&plane, &p).map_err(|e| e.to_string())?;
                println!("singular at {p}: {singular}");
                if singular {
                    let rep = node_or_cusp(&plane, &p).map_err(|e| e.to_string())?;
                    println!(
                        "multiplicity {}, hessian rank {}, type {}",
                        rep.multiplicity, rep.hessian_rank, rep.classification
                    );
                }
                return Ok(ExitCode::SUCCESS);
            }
            let locus = singular_points(&plane).map_err(|e| e.to_string())?;
            if locus.is_smooth_certificate() {
                println!("smooth (complete elimination, empty singular locus)");
            } else {
                for rep in &locus.points {
                    println!(
                        "singular {} multiplicity {} hessian-rank {} type {}",
                        rep.point, rep.multiplicity, rep.hessian_rank, rep.classification
                    );
                }
                for res in &locus.residuals {
                    println!(
                        "residual factor ({}, degree {}): {}",
                        res.chart, res.degree, res.factor
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::GeneralPosition { points_file } => {
            let text = std::fs::read_to_string(&points_file).map_err(|e| e.to_string())?;
            let mut points = Vec::new();
            for line in text.lines() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                points.push(parse_point(line, k3verify::matgroup::Ambient::P2)?);
            }
            let res = general_position(&points).map_err(|e| e.to_string())?;
            if res.ok {
                println!("general position: true");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("general position: false ({:?})", res.violation);
                Ok(ExitCode::from(1))
            }
        }
        Command::Ledger(cmd) => ledger(cmd),
    }
}

fn verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let names: Vec<String> = if args.all {
        list_scenarios().into_iter().map(String::from).collect()
    } else {
        vec![args.scenario.ok_or("give a scenario name or --all")?]
    };
    let reports: Vec<Report> = if args.parallel && names.len() > 1 {
        std::thread::scope(|scope| {
            let handles: Vec<_> = names
                .iter()
                .map(|n| {
                    let n = n.clone();
                    scope.spawn(move || run_scenario(&n))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("scenario thread"))
                .collect::<Result<Vec<_>, _>>()
        })
        .map_err(|e| e.to_string())?
    } else {
        names
            .iter()
            .map(|n| run_scenario(n))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?
    };
    for report in &reports {
        print!("{}", report.to_text());
    }
    if let Some(path) = args.json {
        let joined: Vec<serde_json::Value> = reports
            .iter()
            .map(|r| serde_json::from_str(&r.to_json()).expect("valid json"))
            .collect();
        let body = if joined.len() == 1 {
            serde_json::to_string_pretty(&joined[0]).expect("serializes")
        } else {
            serde_json::to_string_pretty(&joined).expect("serializes")
        };
        std::fs::write(&path, body).map_err(|e| e.to_string())?;
    }
    if reports.iter().all(|r| r.passed()) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn space_args<'a>(
    cat: &'a BuiltCatalog,
    args: &SpaceArgs,
) -> Result<(&'a k3verify::matgroup::MatrixGroup, Grading, Character), String> {
    let group = cat.group(&args.group).map_err(|e| e.to_string())?;
    let grading = match (&args.degree, &args.bidegree) {
        (Some(d), None) => Grading::Total(*d),
        (None, Some(s)) => {
            let (a, b) = s.split_once(',').ok_or("bidegree must look like A,B")?;
            Grading::Bi {
                split: 2,
                a: a.trim().parse().map_err(|_| "bad bidegree")?,
                b: b.trim().parse().map_err(|_| "bad bidegree")?,
            }
        }
        _ => return Err("give exactly one of --degree or --bidegree".into()),
    };
    let chi = match args.character.as_str() {
        "trivial" => Character::trivial(group),
        "det" => Character::det(group),
        spec => {
            // A path may carry the assignments instead.
            let assignments = match std::fs::read_to_string(spec) {
                Ok(body) => body.trim().to_string(),
                Err(_) => spec.to_string(),
            };
            let mut values = vec![CycloNum::one(); group.generators().len()];
            for part in assignments.split(',') {
                let (name, expr) = part
                    .split_once('=')
                    .ok_or("character must be trivial, det, or gen=expr,...")?;
                let idx = group
                    .generator_names()
                    .iter()
                    .position(|n| n == name.trim())
                    .ok_or_else(|| format!("unknown generator '{name}'"))?;
                values[idx] = parse_cyclo(expr.trim(), 1).map_err(|e| e.to_string())?;
            }
            Character::from_generator_values(group, &assignments, &values)
                .map_err(|e| e.to_string())?
        }
    };
    Ok((group, grading, chi))
}

fn parse_point(text: &str, ambient: k3verify::matgroup::Ambient) -> Result<PointP, String> {
    let coords: Result<Vec<CycloNum>, _> =
        text.split(',').map(|c| parse_cyclo(c.trim(), 1)).collect();
    PointP::new(ambient, coords.map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

fn ledger(cmd: LedgerCommand) -> Result<ExitCode, String> {
    fn ints(s: &str) -> Result<Vec<i64>, String> {
        if s.trim().is_empty() {
            return Ok(Vec::new());
        }
        s.split(',')
            .map(|p| p.trim().parse().map_err(|_| format!("bad integer '{p}'")))
            .collect()
    }
    let output = match cmd {
        LedgerCommand::Cover { ey, branch } => {
            let eulers = ints(&branch)?;
            let value = surfledger::euler_double_cover(ey, &eulers);
            serde_json::json!({"e_quotient": ey, "branch_eulers": eulers, "e_cover": value})
        }
        LedgerCommand::Mori { g, n, m, emin } => {
            let holds = surfledger::mori_constraint(g, n, m, emin).map_err(|e| e.to_string())?;
            let budget = surfledger::mori_budget(n, emin).map_err(|e| e.to_string())?;
            serde_json::json!({
                "g": g, "n": n, "m": m, "e_min": emin,
                "identity_holds": holds, "fiber_budget": budget
            })
        }
        LedgerCommand::Blowdown { bsq, mults } => {
            let mults = ints(&mults)?;
            let value = surfledger::blowdown_selfint(bsq, &mults);
            serde_json::json!({"b_sq": bsq, "fiber_mults": mults, "image_sq": value})
        }
        LedgerCommand::BranchDouble { csq } => {
            serde_json::json!({"c_sq": csq, "image_sq": surfledger::branch_selfint_double(csq)})
        }
        LedgerCommand::Adjunction { kc, csq } => {
            let g = surfledger::adjunction_genus(kc, csq).map_err(|e| e.to_string())?;
            serde_json::json!({"kc": kc, "c_sq": csq, "genus": g})
        }
        LedgerCommand::Nikulin { order } => {
            let v = surfledger::nikulin_fixed_points(order).map_err(|e| e.to_string())?;
            serde_json::json!({"order": order, "fixed_points": v})
        }
        LedgerCommand::DelpezzoLines { degree } => {
            let v = surfledger::delpezzo_line_count(degree).map_err(|e| e.to_string())?;
            serde_json::json!({"degree": degree, "lines": v})
        }
        LedgerCommand::H0 { degree, r } => {
            let v = surfledger::h0_anticanonical(degree, r).map_err(|e| e.to_string())?;
            serde_json::json!({"degree": degree, "r": r, "h0": v})
        }
        LedgerCommand::RiemannHurwitz { deg, ebase, contrib } => {
            let v = surfledger::riemann_hurwitz(deg, ebase, contrib);
            serde_json::json!({
                "deg": deg, "e_base": ebase,
                "branch_contribution": contrib, "e_total": v
            })
        }
    };
    println!("{}", serde_json::to_string_pretty(&output).expect("json"));
    Ok(ExitCode::SUCCESS)
}
