//! `crosscube`: build, inspect and verify PIPs and their complexes.
//!
//! Exit status: 0 on success, 1 when a check or verification fails,
//! 2 on bad input.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crosscube::coloring::{chromatic_number, find_r_coloring, is_balanced_pair, lift_coloring};
use crosscube::io::{
    crossing_dot, cubical_coloring_json, fmt_downset, fmt_set, format_face, hasse_dot, parse_pip_any, pip_to_json,
    poly_json, simplicial_coloring_json, skeleton_dot, write_pip, SimplicialJson,
};
use crosscube::poly::{
    euler_characteristic, f_poly_cubical, f_poly_derivative, f_poly_simplicial, hyperplane_count,
};
use crosscube::verify::{run_check, CheckConfig};
use crosscube::{AbstractCubicalComplex, CubicalComplexP, ElementSet, Pip, SimplicialComplex};

#[derive(Parser)]
#[command(name = "crosscube", version, about = "Posets with inconsistent pairs and their cubical and crossing complexes")]
struct Cli {
    /// Read and print element labels starting from 1.
    #[arg(long, global = true)]
    one_based: bool,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Export {
    Hasse,
    Crossing,
    Skeleton,
    Abstract,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a PIP (or an abstract complex in JSON) and report its shape.
    Validate { input: PathBuf },
    /// Vertices, faces and f-vector of the cubical complex, plus the crossing complex.
    Build { input: PathBuf },
    /// The crossing complex.
    Crossing { input: PathBuf },
    /// Both f-polynomials and the identities relating them.
    Fvector { input: PathBuf },
    /// One hyperplane complex per element.
    Hyperplanes { input: PathBuf },
    /// The derivative complex and its decomposition by hyperplane.
    Derivative { input: PathBuf },
    /// Colourings of both complexes and balancedness.
    Color {
        input: PathBuf,
        /// Look for a colouring with this many colours instead of the minimum.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Extract the PIP of a rooted abstract cubical complex (JSON).
    Roundtrip {
        input: PathBuf,
        /// Root vertex, overriding the one in the file.
        #[arg(long)]
        root: Option<usize>,
        /// Rebuild the complex from the PIP and compare.
        #[arg(long)]
        verify: bool,
    },
    /// Graphviz drawings, or the abstract complex as JSON.
    Export {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Export::Hasse)]
        what: Export,
    },
    /// Run every property suite over golden and seeded random instances.
    Check {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        /// Drop the first inconsistency of this golden fixture before checking.
        #[arg(long)]
        mutate: Option<String>,
        /// List passing results too (text format).
        #[arg(long)]
        verbose: bool,
    },
}

enum Failure {
    /// Unreadable or invalid input.
    Input(String),
    /// A check ran and failed; the report has already been printed.
    Check,
}

impl From<crosscube::Error> for Failure {
    fn from(e: crosscube::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }
}

fn is_abstract_json(text: &str) -> bool {
    serde_json::from_str::<Value>(text).is_ok_and(|v| v.get("faces").is_some())
}

fn load_pip(path: &PathBuf, base: usize) -> Result<Pip, Failure> {
    let text = read_input(path)?;
    parse_pip_any(&text, base).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_abstract(path: &PathBuf, root: Option<usize>) -> Result<AbstractCubicalComplex, Failure> {
    let text = read_input(path)?;
    let raw: AbstractCubicalComplex =
        serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(AbstractCubicalComplex::new(
        raw.n_vertices,
        raw.faces,
        root.unwrap_or(raw.root),
    )?)
}

fn labels(s: ElementSet, base: usize) -> Vec<usize> {
    s.iter().map(|x| x + base).collect()
}

fn pretty(v: Value) -> String {
    serde_json::to_string_pretty(&v).expect("serialisable") + "\n"
}

fn no_dot(format: Format) -> Result<(), Failure> {
    if format == Format::Dot {
        return Err(Failure::Input("this command has no dot output; use `export`".into()));
    }
    Ok(())
}

fn cmd_validate(input: &PathBuf, base: usize, format: Format) -> Outcome {
    no_dot(format)?;
    let text = read_input(input)?;
    if is_abstract_json(&text) {
        let a = load_abstract(input, None)?;
        a.validate()?;
        let counts = a.face_counts();
        return Ok(match format {
            Format::Json => pretty(json!({ "kind": "cubical", "valid": true, "f_vector": counts })),
            _ => format!("valid cubical complex, f-vector {counts:?}\n"),
        });
    }
    let p = parse_pip_any(&text, base).map_err(|e| Failure::Input(format!("{}: {e}", input.display())))?;
    let (covers, incons) = (p.hasse_covers().len(), p.minimal_inconsistent_pairs().len());
    Ok(match format {
        Format::Json => pretty(json!({
            "kind": "pip", "valid": true, "n": p.len(), "covers": covers, "minimal_inconsistent_pairs": incons,
        })),
        _ => format!(
            "valid PIP: {} elements, {covers} covers, {incons} minimal inconsistent pairs\n",
            p.len()
        ),
    })
}

fn cmd_build(p: &Pip, base: usize, format: Format) -> Outcome {
    no_dot(format)?;
    let x = CubicalComplexP::build(p)?;
    let delta = SimplicialComplex::crossing_complex(p)?;
    let counts = x.face_counts();
    if format == Format::Json {
        let faces: Vec<Value> = x
            .faces()
            .iter()
            .map(|f| json!({ "downset": labels(f.downset, base), "span": labels(f.span, base) }))
            .collect();
        return Ok(pretty(json!({
            "vertices": x.downsets().iter().map(|&d| labels(d, base)).collect::<Vec<_>>(),
            "faces": faces,
            "f_vector": counts,
            "crossing_faces": delta.faces().iter().map(|&f| labels(f, base)).collect::<Vec<_>>(),
        })));
    }
    let mut out = String::new();
    writeln!(out, "vertices {}", x.vertex_count()).unwrap();
    for &d in x.downsets() {
        writeln!(out, "  {}", fmt_downset(d, base)).unwrap();
    }
    writeln!(out, "faces {}", x.faces().len()).unwrap();
    for f in x.faces() {
        writeln!(out, "  {}", format_face(f, base)).unwrap();
    }
    let fv: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
    writeln!(out, "f-vector {}", fv.join(" ")).unwrap();
    writeln!(out, "crossing faces {}", delta.faces().len()).unwrap();
    for &f in delta.faces() {
        writeln!(out, "  {}", fmt_set(f, base)).unwrap();
    }
    Ok(out)
}

fn cmd_crossing(p: &Pip, base: usize, format: Format) -> Outcome {
    let delta = SimplicialComplex::crossing_complex(p)?;
    let comps = delta.connected_components();
    Ok(match format {
        Format::Dot => crossing_dot(&delta, base),
        Format::Json => {
            let mut v = serde_json::to_value(SimplicialJson::from_complex(&delta, base)).expect("serialisable");
            v["dim"] = json!(delta.dim());
            v["flag"] = json!(delta.is_flag());
            v["components"] = json!(comps.iter().map(|&c| labels(c, base)).collect::<Vec<_>>());
            pretty(v)
        }
        Format::Text => {
            let mut out = format!("dimension {}, {} faces\nfacets\n", delta.dim(), delta.faces().len());
            for &f in delta.facets() {
                writeln!(out, "  {}", fmt_set(f, base)).unwrap();
            }
            let comps: Vec<String> = comps.iter().map(|&c| fmt_set(c, base)).collect();
            writeln!(out, "components {}", comps.join(" ")).unwrap();
            out
        }
    })
}

fn cmd_fvector(p: &Pip, format: Format) -> Outcome {
    no_dot(format)?;
    let fd = f_poly_simplicial(&SimplicialComplex::crossing_complex(p)?);
    let fc = f_poly_cubical(&CubicalComplexP::build(p)?);
    let shifted = fd.shift(1.into());
    let identity = shifted == fc;
    let chi = euler_characteristic(&fc);
    let h = hyperplane_count(&fc);
    Ok(match format {
        Format::Json => pretty(json!({
            "simplicial": poly_json(&fd),
            "cubical": poly_json(&fc),
            "identity": identity,
            "euler_characteristic": chi.to_string(),
            "hyperplanes": h.to_string(),
            "elements": p.len(),
        })),
        _ => format!(
            "f(Δ, t) = {fd}\nf(ℂ, t) = {fc}\nf(Δ, 1+t) = {shifted} ({})\nχ(ℂ) = {chi}\nhyperplanes = {h} (|P| = {})\n",
            if identity { "equal" } else { "NOT equal" },
            p.len()
        ),
    })
}

fn cmd_hyperplanes(p: &Pip, base: usize, format: Format) -> Outcome {
    no_dot(format)?;
    let x = CubicalComplexP::build(p)?;
    let delta = SimplicialComplex::crossing_complex(p)?;
    let mut rows = Vec::new();
    let mut out = String::new();
    for h in x.hyperplane_complexes()? {
        let crossing = h.sub.members();
        let link = delta.link(ElementSet::singleton(h.element))?;
        let counts = h.complex.face_counts();
        if format == Format::Json {
            rows.push(json!({
                "element": h.element + base,
                "crosses": labels(crossing, base),
                "f_vector": counts,
                "faces_crossed": h.realizing_faces.len(),
                "link_facets": link.facets().iter().map(|&f| labels(f, base)).collect::<Vec<_>>(),
            }));
        } else {
            let fv: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
            writeln!(
                out,
                "H{}: crosses {}, f-vector {}, cuts {} faces",
                h.element + base,
                fmt_set(crossing, base),
                fv.join(" "),
                h.realizing_faces.len()
            )
            .unwrap();
        }
    }
    Ok(if format == Format::Json { pretty(Value::Array(rows)) } else { out })
}

fn cmd_derivative(p: &Pip, base: usize, format: Format) -> Outcome {
    no_dot(format)?;
    let x = CubicalComplexP::build(p)?;
    let d = x.derivative_direct();
    let hs = x.hyperplane_complexes()?;
    let decomposition = d.match_hyperplanes(&x, &hs);
    let fd = f_poly_derivative(&d);
    let derivative = f_poly_cubical(&x).derivative();
    let comps: Vec<(usize, Vec<usize>)> = d
        .components
        .iter()
        .map(|comp| {
            let mut f = Vec::new();
            for &e in comp {
                let k = d.elements[e].dim;
                if f.len() <= k {
                    f.resize(k + 1, 0);
                }
                f[k] += 1;
            }
            (d.elements[comp[0]].direction + base, f)
        })
        .collect();
    Ok(match format {
        Format::Json => pretty(json!({
            "elements": d.len(),
            "components": comps.iter().map(|(x, f)| json!({ "element": x, "f_vector": f })).collect::<Vec<_>>(),
            "f_polynomial": poly_json(&fd),
            "cubical_derivative": poly_json(&derivative),
            "matches_hyperplanes": decomposition.is_ok(),
        })),
        _ => {
            let mut out = format!("{} elements, {} components\n", d.len(), comps.len());
            for (x, f) in &comps {
                writeln!(out, "  H{x}: f-vector {f:?}").unwrap();
            }
            writeln!(out, "f(D, t) = {fd}\nf′(ℂ, t) = {derivative}").unwrap();
            match decomposition {
                Ok(_) => out.push_str("matches the hyperplane complexes\n"),
                Err(e) => writeln!(out, "does NOT match the hyperplane complexes: {e}").unwrap(),
            }
            out
        }
    })
}

fn cmd_color(p: &Pip, r: Option<usize>, base: usize, format: Format) -> Outcome {
    no_dot(format)?;
    let x = CubicalComplexP::build(p)?;
    let delta = SimplicialComplex::crossing_complex(p)?;
    let chi = chromatic_number(&delta);
    let r = r.unwrap_or(chi);
    let kappa = find_r_coloring(&delta, r);
    let lifted = kappa.as_ref().map(|k| lift_coloring(&x, k)).transpose()?;
    let report = is_balanced_pair(p)?;
    if format == Format::Json {
        return Ok(pretty(json!({
            "chromatic_number": chi,
            "dimension": x.dim(),
            "r": r,
            "simplicial": kappa.as_ref().map(simplicial_coloring_json),
            "cubical": lifted.as_ref().map(cubical_coloring_json),
            "balanced": { "simplicial": report.simplicial, "cubical": report.cubical },
        })));
    }
    let mut out = format!("chromatic number {chi}, dim ℂ {}\n", x.dim());
    match (&kappa, &lifted) {
        (Some(k), Some(c)) => {
            writeln!(out, "{r}-colouring of Δ").unwrap();
            for v in delta.vertices() {
                writeln!(out, "{}:{}", v + base, k.assignment[v] + 1).unwrap();
            }
            writeln!(out, "lifted {r}-colouring of ℂ").unwrap();
            for (v, &d) in x.downsets().iter().enumerate() {
                writeln!(out, "{}:{}", fmt_downset(d, base), c.bits(v)).unwrap();
            }
        }
        _ => writeln!(out, "no {r}-colouring").unwrap(),
    }
    writeln!(
        out,
        "balanced: Δ {}, ℂ {}",
        if report.simplicial { "yes" } else { "no" },
        if report.cubical { "yes" } else { "no" }
    )
    .unwrap();
    Ok(out)
}

fn cmd_roundtrip(input: &PathBuf, root: Option<usize>, verify: bool, base: usize, format: Format) -> Result<String, Failure> {
    no_dot(format)?;
    let a = load_abstract(input, root)?;
    let ext = a.extract_pip()?;
    let mut out = match format {
        Format::Json => pip_to_json(&ext.pip, base) + "\n",
        _ => write_pip(&ext.pip, base),
    };
    if verify {
        let rebuilt = CubicalComplexP::build(&ext.pip)?;
        let map: Option<Vec<usize>> = (0..a.n_vertices)
            .map(|v| {
                let d: ElementSet = (0..ext.hyperplanes.len())
                    .filter(|&i| ext.hyperplanes[i].far_side.contains(&v))
                    .collect();
                rebuilt.vertex_of(d)
            })
            .collect();
        let same = match map {
            Some(map) if rebuilt.vertex_count() == a.n_vertices => a.relabel(&map)? == rebuilt.to_abstract(),
            _ => false,
        };
        if !same {
            eprint!("{out}");
            eprintln!("verify: the rebuilt complex is not isomorphic to the input");
            return Err(Failure::Check);
        }
        if format != Format::Json {
            out.push_str("# verify: rebuilt complex is isomorphic to the input\n");
        }
    }
    Ok(out)
}

fn cmd_export(p: &Pip, what: Export, base: usize) -> Outcome {
    Ok(match what {
        Export::Hasse => hasse_dot(p, base),
        Export::Crossing => crossing_dot(&SimplicialComplex::crossing_complex(p)?, base),
        Export::Skeleton => skeleton_dot(&CubicalComplexP::build(p)?, base),
        Export::Abstract => serde_json::to_string(&CubicalComplexP::build(p)?.to_abstract()).expect("serialisable") + "\n",
    })
}

fn cmd_check(config: CheckConfig, verbose: bool, format: Format) -> Outcome {
    no_dot(format)?;
    let report = run_check(&config)?;
    let text = match format {
        Format::Json => pretty(report.to_json()),
        _ if verbose => report.to_text(),
        _ => report
            .to_text()
            .lines()
            .filter(|l| !l.starts_with("PASS "))
            .map(|l| l.to_string() + "\n")
            .collect(),
    };
    if report.all_passed() {
        Ok(text)
    } else {
        print!("{text}");
        for r in report.failures() {
            eprintln!("check failed: {} {}", r.instance, r.suite);
        }
        Err(Failure::Check)
    }
}

fn run(cli: Cli) -> Outcome {
    let base = usize::from(cli.one_based);
    let format = cli.format;
    match cli.command {
        Command::Validate { input } => cmd_validate(&input, base, format),
        Command::Build { input } => cmd_build(&load_pip(&input, base)?, base, format),
        Command::Crossing { input } => cmd_crossing(&load_pip(&input, base)?, base, format),
        Command::Fvector { input } => cmd_fvector(&load_pip(&input, base)?, format),
        Command::Hyperplanes { input } => cmd_hyperplanes(&load_pip(&input, base)?, base, format),
        Command::Derivative { input } => cmd_derivative(&load_pip(&input, base)?, base, format),
        Command::Color { input, r } => cmd_color(&load_pip(&input, base)?, r, base, format),
        Command::Roundtrip { input, root, verify } => cmd_roundtrip(&input, root, verify, base, format),
        Command::Export { input, what } => cmd_export(&load_pip(&input, base)?, what, base),
        Command::Check {
            seed,
            count,
            n_max,
            mutate,
            verbose,
        } => cmd_check(
            CheckConfig {
                seed,
                count,
                n_max,
                mutate,
            },
            verbose,
            format,
        ),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
