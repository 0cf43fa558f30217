//! Command-line surface: parse `.scx` complexes, run the library
//! operations, and emit text or JSON reports.
//!
//! Exit codes: 0 = computed; 1 = a mathematical verdict (non-Golod /
//! torsion found / certification failure); 2 = usage or guard error.

use clap::{Parser, Subcommand};
use macx::cochain::{massey_triple, CochainSpace, MasseyVerdict, MultidegreeClass};
use macx::collapse::collapse_onto;
use macx::complex::Complex;
use macx::constructions::{box_product, OrderedComplex};
use macx::error::MacxError;
use macx::field::RingSpec;
use macx::homology::{homology, DEFAULT_FACE_CAP};
use macx::moment_angle::{
    counterexample_pipeline, golod_check, golod_default_fields, hochster, zk_poincare_series,
    GolodVerdict, PipelineCheck, ScanCaps, DEFAULT_SUBSET_CAP,
};
use macx::report::{homology_json, ReportEnvelope};
use macx::scx::{parse_scx, render_scx};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "macx",
    version,
    about = "Exact combinatorics of simplicial complexes and their moment-angle cohomology"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// emit a JSON report envelope instead of text
    #[arg(long, global = true)]
    json: bool,
    /// cap the parallel subset scans (falls back to MACX_THREADS)
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    /// refuse 2^m subset scans beyond this many vertices
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_SUBSET_CAP)]
    max_subsets: usize,
    /// refuse full face enumerations beyond this many faces
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_FACE_CAP)]
    max_faces: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a complex and report its basic shape
    Validate { file: PathBuf },
    /// Homology groups (unreduced by default)
    Homology {
        file: PathBuf,
        #[arg(long, default_value = "z")]
        ring: String,
        /// report reduced homology (degree -1 included)
        #[arg(long)]
        reduced: bool,
    },
    /// Alexander dual, as .scx
    Dual { file: PathBuf },
    /// Link of a face, as .scx
    Link {
        file: PathBuf,
        /// face as comma-separated labels (omit for the empty face)
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        face: Vec<String>,
    },
    /// Star of a face, as .scx
    Star {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        face: Vec<String>,
    },
    /// Simplicial join of two complexes, as .scx
    Join { file1: PathBuf, file2: PathBuf },
    /// Union along the common face inferred from the shared ground labels
    Union { file1: PathBuf, file2: PathBuf },
    /// Staircase product, as .scx
    Boxprod { file1: PathBuf, file2: PathBuf },
    /// Bigraded table of the moment-angle cohomology
    Hochster {
        file: PathBuf,
        #[arg(long, default_value = "z")]
        ring: String,
    },
    /// Golodness test; exits 1 with a witness when non-Golod
    Golod {
        file: PathBuf,
        /// field to test (default: Q plus every torsion prime of the table)
        #[arg(long)]
        ring: Option<String>,
    },
    /// Search a collapse onto a subcomplex
    Collapse {
        file: PathBuf,
        #[arg(long)]
        onto: PathBuf,
        #[arg(long, default_value_t = macx::collapse::DEFAULT_COLLAPSE_BUDGET)]
        budget: usize,
    },
    /// Triple Massey products over F2 for three disjoint supports
    Massey {
        file: PathBuf,
        /// three supports as label lists: "1,2/3,4/5,6"
        #[arg(long)]
        supports: String,
    },
    /// Run the counterexample certification pipeline
    Counterexample {
        /// comma-separated subset of golod,torsion,sq2 (or "all")
        #[arg(long, default_value = "all")]
        check: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli
        .threads
        .or_else(|| std::env::var("MACX_THREADS").ok().and_then(|v| v.parse().ok()));
    if let Some(n) = threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

struct Ctx {
    json: bool,
    caps: ScanCaps,
    started: Instant,
}

impl Ctx {
    fn emit(&self, command: &str, input: Option<&[u8]>, results: serde_json::Value, text: String) {
        if self.json {
            let envelope =
                ReportEnvelope::new(command, input, results, self.started.elapsed().as_millis());
            println!("{}", serde_json::to_string_pretty(&envelope).unwrap());
        } else {
            print!("{text}");
        }
    }
}

fn read_complex(path: &PathBuf) -> Result<(Complex, Vec<u8>), MacxError> {
    let bytes = std::fs::read(path)
        .map_err(|e| MacxError::InvalidArgument(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| MacxError::InvalidArgument(format!("{}: not UTF-8", path.display())))?;
    Ok((parse_scx(&text)?, bytes))
}

fn run(cli: Cli) -> Result<ExitCode, MacxError> {
    let ctx = Ctx {
        json: cli.json,
        caps: ScanCaps { subset_cap: cli.max_subsets, face_cap: cli.max_faces },
        started: Instant::now(),
    };
    match cli.command {
        Command::Validate { file } => {
            let (k, bytes) = read_complex(&file)?;
            let ghosts = k.ground().labels_of(&k.ghost_vertices());
            let f = k.f_vector(ctx.caps.face_cap)?;
            let pure = k.facets().iter().all(|x| x.len() as i64 - 1 == k.dim());
            let results = json!({
                "vertices": k.ground().len(),
                "facets": k.facet_count(),
                "dimension": k.dim(),
                "f_vector": f,
                "ghost_vertices": ghosts,
                "pure": pure,
                "closed_pseudomanifold": k.is_closed_pseudomanifold(),
            });
            let text = format!(
                "vertices: {}\nfacets: {}\ndimension: {}\nf-vector: {:?}\nghosts: {:?}\npure: {}\nclosed pseudomanifold: {}\n",
                k.ground().len(),
                k.facet_count(),
                k.dim(),
                f,
                ghosts,
                pure,
                k.is_closed_pseudomanifold(),
            );
            ctx.emit("validate", Some(&bytes), results, text);
            Ok(ExitCode::SUCCESS)
        }
        Command::Homology { file, ring, reduced } => {
            let (k, bytes) = read_complex(&file)?;
            let ring = RingSpec::parse(&ring)?;
            let h = homology(&k, ring, reduced, ctx.caps.face_cap)?;
            let results = json!({
                "ring": ring.to_string(),
                "reduced": reduced,
                "groups": homology_json(&h),
            });
            let mut text = format!("homology over {ring}:\n");
            for (i, g) in h.groups.iter().enumerate() {
                text.push_str(&format!("  H_{}: {}\n", h.min_degree + i as i64, g));
            }
            ctx.emit("homology", Some(&bytes), results, text);
            Ok(ExitCode::SUCCESS)
        }
        Command::Dual { file } => {
            let (k, bytes) = read_complex(&file)?;
            let dual = k.alexander_dual()?;
            let scx = render_scx(&dual);
            ctx.emit("dual", Some(&bytes), json!({ "scx": scx }), scx.clone());
            Ok(ExitCode::SUCCESS)
        }
        Command::Link { file, face } => {
            let (k, bytes) = read_complex(&file)?;
            let face: Vec<String> = face.into_iter().filter(|s| !s.is_empty()).collect();
            let set = k.ground().set_from_labels(face.iter())?;
            let link = k.link(&set)?;
            let scx = render_scx(&link);
            ctx.emit("link", Some(&bytes), json!({ "scx": scx }), scx.clone());
            Ok(ExitCode::SUCCESS)
        }
        Command::Star { file, face } => {
            let (k, bytes) = read_complex(&file)?;
            let face: Vec<String> = face.into_iter().filter(|s| !s.is_empty()).collect();
            let set = k.ground().set_from_labels(face.iter())?;
            let star = k.star(&set)?;
            let scx = render_scx(&star);
            ctx.emit("star", Some(&bytes), json!({ "scx": scx }), scx.clone());
            Ok(ExitCode::SUCCESS)
        }
        Command::Join { file1, file2 } => {
            let (a, bytes) = read_complex(&file1)?;
            let (b, _) = read_complex(&file2)?;
            let joined = a.join(&b)?;
            let scx = render_scx(&joined);
            ctx.emit("join", Some(&bytes), json!({ "scx": scx }), scx.clone());
            Ok(ExitCode::SUCCESS)
        }
        Command::Union { file1, file2 } => {
            let (a, bytes) = read_complex(&file1)?;
            let (b, _) = read_complex(&file2)?;
            let shared: Vec<String> = a
                .ground()
                .labels()
                .iter()
                .filter(|l| b.ground().position(l).is_some())
                .cloned()
                .collect();
            let union = a.union_along_face(&b, &shared)?;
            let scx = render_scx(&union);
            ctx.emit("union", Some(&bytes), json!({ "scx": scx, "alpha": shared }), scx.clone());
            Ok(ExitCode::SUCCESS)
        }
        Command::Boxprod { file1, file2 } => {
            let (a, bytes) = read_complex(&file1)?;
            let (b, _) = read_complex(&file2)?;
            let prod = box_product(&OrderedComplex::natural(a), &OrderedComplex::natural(b))?;
            let scx = render_scx(&prod);
            ctx.emit("boxprod", Some(&bytes), json!({ "scx": scx }), scx.clone());
            Ok(ExitCode::SUCCESS)
        }
        Command::Hochster { file, ring } => {
            let (k, bytes) = read_complex(&file)?;
            let ring = RingSpec::parse(&ring)?;
            let betti = hochster(&k, ring, ctx.caps)?;
            let mut rows = Vec::new();
            for ((i, subset), group) in &betti.entries {
                rows.push(json!({
                    "i": i,
                    "subset": k.ground().labels_of(subset),
                    "total_degree": macx::moment_angle::BigradedBetti::total_degree(*i, subset),
                    "rank": group.rank,
                    "torsion": group.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                }));
            }
            let zk: Vec<serde_json::Value> = betti
                .zk_cohomology()
                .iter()
                .map(|(p, g)| {
                    json!({
                        "degree": p,
                        "rank": g.rank,
                        "torsion": g.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let series_text = if ring.is_field() {
                zk_poincare_series(&betti)?.to_string()
            } else {
                String::new()
            };
            let results = json!({
                "ring": ring.to_string(),
                "subsets_scanned": betti.subsets_scanned,
                "ghost_vertices": betti.ghost_labels,
                "entries": rows,
                "zk_cohomology": zk,
                "poincare_series": series_text,
            });
            let mut text = format!(
                "bigraded table over {} ({} subsets scanned)\n",
                ring, betti.subsets_scanned
            );
            for ((i, subset), group) in &betti.entries {
                text.push_str(&format!("  i={} I={} -> {}\n", i, k.ground().display(subset), group));
            }
            if !betti.ghost_labels.is_empty() {
                text.push_str(&format!(
                    "ambient torus factor from ghost vertices: {:?}\n",
                    betti.ghost_labels
                ));
            }
            if !series_text.is_empty() {
                text.push_str(&format!("Poincare series: {series_text}\n"));
            }
            ctx.emit("hochster", Some(&bytes), results, text);
            Ok(ExitCode::SUCCESS)
        }
        Command::Golod { file, ring } => {
            let (k, bytes) = read_complex(&file)?;
            let fields = match ring {
                Some(r) => vec![RingSpec::parse(&r)?],
                None => golod_default_fields(&k, ctx.caps)?,
            };
            let report = golod_check(&k, &fields, ctx.caps)?;
            let golod = report.is_golod();
            let results = serde_json::to_value(&report).unwrap();
            let text = match &report.verdict {
                GolodVerdict::Golod => format!(
                    "Golod over {:?} ({} pairs, {} triples; massey: {})\n",
                    report.fields_checked,
                    report.pairs_examined,
                    report.triples_examined,
                    report.massey_route
                ),
                GolodVerdict::NonGolod { witness } => format!(
                    "non-Golod over {}: product of classes on I={:?} (deg {}) and J={:?} (deg {}) is nonzero\n",
                    witness.field,
                    witness.support_i,
                    witness.degree_i,
                    witness.support_j,
                    witness.degree_j
                ),
                GolodVerdict::MasseyNontrivial { witness } => format!(
                    "non-Golod over {}: nontrivial triple Massey product on supports {:?}\n",
                    witness.field, witness.supports
                ),
            };
            ctx.emit("golod", Some(&bytes), results, text);
            Ok(if golod { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Collapse { file, onto, budget } => {
            let (k, bytes) = read_complex(&file)?;
            let (target, _) = read_complex(&onto)?;
            let trace = collapse_onto(&k, &target, budget, ctx.caps.face_cap)?;
            let results = json!({
                "steps": trace.steps.len(),
                "trace": trace.to_json(),
            });
            let text = format!("collapsed in {} elementary steps\n", trace.steps.len());
            ctx.emit("collapse", Some(&bytes), results, text);
            Ok(ExitCode::SUCCESS)
        }
        Command::Massey { file, supports } => {
            let (k, bytes) = read_complex(&file)?;
            let parts: Vec<Vec<String>> = supports
                .split('/')
                .map(|p| {
                    p.split(',')
                        .map(|s| s.trim().to_string())
                        .filter(|s| !s.is_empty())
                        .collect()
                })
                .collect();
            if parts.len() != 3 {
                return Err(MacxError::InvalidArgument(
                    "--supports needs three '/'-separated label lists".into(),
                ));
            }
            let sets: Vec<_> = parts
                .iter()
                .map(|p| k.ground().set_from_labels(p.iter()))
                .collect::<Result<Vec<_>, _>>()?;
            let spaces: Vec<CochainSpace> = sets
                .iter()
                .map(|s| CochainSpace::new(k.restriction(s), RingSpec::F2, ctx.caps.face_cap))
                .collect::<Result<Vec<_>, _>>()?;
            let mut verdicts = Vec::new();
            let mut any_nontrivial = false;
            for da in -1..=spaces[0].max_degree() {
                for xa in spaces[0].cohomology_basis(da) {
                    for db in -1..=spaces[1].max_degree() {
                        for xb in spaces[1].cohomology_basis(db) {
                            for dc in -1..=spaces[2].max_degree() {
                                for xc in spaces[2].cohomology_basis(dc) {
                                    let a = MultidegreeClass {
                                        support: sets[0].clone(),
                                        cochain: xa.clone(),
                                    };
                                    let b = MultidegreeClass {
                                        support: sets[1].clone(),
                                        cochain: xb.clone(),
                                    };
                                    let c = MultidegreeClass {
                                        support: sets[2].clone(),
                                        cochain: xc.clone(),
                                    };
                                    let v = massey_triple(&k, &a, &b, &c, ctx.caps.face_cap)?;
                                    let status = match &v {
                                        MasseyVerdict::Undefined { reason } => {
                                            format!("undefined: {reason}")
                                        }
                                        MasseyVerdict::ContainsZero => "contains zero".to_string(),
                                        MasseyVerdict::NontrivialWitness { .. } => {
                                            any_nontrivial = true;
                                            "nontrivial".to_string()
                                        }
                                    };
                                    verdicts.push(json!({
                                        "degrees": [da, db, dc],
                                        "status": status,
                                    }));
                                }
                            }
                        }
                    }
                }
            }
            let count = verdicts.len();
            let results = json!({
                "field": "F2",
                "supports": parts,
                "verdicts": verdicts,
                "any_nontrivial": any_nontrivial,
            });
            let text = format!(
                "{count} basis triples examined; nontrivial Massey product: {any_nontrivial}\n"
            );
            ctx.emit("massey", Some(&bytes), results, text);
            Ok(if any_nontrivial { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Counterexample { check } => {
            let checks = PipelineCheck::parse(&check)?;
            let report = counterexample_pipeline(&checks, ctx.caps)?;
            let results = json!({
                "checks": report.outcomes,
                "all_pass": report.all_pass,
            });
            let mut text = String::new();
            for (o, (_, ms)) in report.outcomes.iter().zip(&report.runtimes_ms) {
                text.push_str(&format!("{}: {} ({} ms)\n", o.check, o.status, ms));
            }
            text.push_str(&format!(
                "certificate: {}\n",
                if report.all_pass { "pass" } else { "FAIL" }
            ));
            ctx.emit("counterexample", None, results, text);
            Ok(if report.all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}
