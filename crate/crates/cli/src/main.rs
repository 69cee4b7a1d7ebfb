//! `cfpo`: command-line front end for the cfpo library.
//!
//! Every verb reads one poset document (a path, or `-` for standard input)
//! and writes JSON to standard output. Exit status is 0 on success, 1 on a
//! domain error and 2 on unreadable or malformed input.

use std::io::Read;
use std::process::ExitCode;

use cfpo::alt::classify;
use cfpo::aut::{automorphisms, fixed_points, orbits, Limits};
use cfpo::completion::complete;
use cfpo::dot::emit_dot;
use cfpo::enumerate::connected_cfpos;
use cfpo::json::{parse_poset, parse_tree, PosetDocument, TreeDocument};
use cfpo::paths::{cycle_witness, CfpoView};
use cfpo::treeify::{
    aut_preserved, completion_fixed_points, interpret_back, treeify, treeify_disconnected, treeify_even,
    treeify_fixed_point_by_id, treeify_odd, TreeifyResult,
};
use cfpo::{ColoredPoset, Error};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "cfpo", version, about = "Cycle-free partial orders: paths, classes, automorphisms and trees")]
struct Cli {
    /// Largest carrier for which group elements or orbits are listed.
    #[arg(long, global = true, default_value_t = Limits::default().carrier)]
    materialise_bound: usize,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Whether the poset is cycle-free, with its component count.
    Check { input: String },
    /// Longest embeddable alternating chain, with a witness.
    Classify { input: String },
    /// Generators and order of the automorphism group.
    Aut { input: String },
    /// Orbits on k-tuples.
    Orbits {
        input: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Points fixed by every automorphism, in the poset and its completion.
    Fixed { input: String },
    /// The completion, with its virtual points listed.
    Complete { input: String },
    /// Converts the poset into a tree with the same automorphism group.
    Treeify {
        input: String,
        #[arg(long, value_enum, default_value_t = Route::Auto)]
        route: Route,
        /// Root for the fixed-point route (an element or completion point id).
        #[arg(long)]
        root: Option<String>,
        /// Print the tree as DOT instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Recovers the poset from a tree produced by `treeify`.
    Interpret { input: String },
    /// Runs the tree construction and checks it end to end.
    Verify { input: String },
    /// DOT rendering of the cover graph.
    Dot {
        input: String,
        /// Render the completion, virtual points dashed.
        #[arg(long)]
        completed: bool,
    },
    /// Streams every connected CFPO up to the given size with its verdict.
    Enumerate {
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Route {
    Auto,
    Fixed,
    Odd,
    Even,
    Disconnected,
}

enum Failure {
    Input(String),
    Domain(Error, Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Malformed(msg) => Failure::Input(msg),
            e => Failure::Domain(e, Value::Null),
        }
    }
}

type Outcome = Result<Output, Failure>;

enum Output {
    Json(Value),
    Lines(Vec<Value>),
    Text(String),
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    let read = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Failure::Input(format!("{path}: {e}")))?;
    Ok(text)
}

fn load(path: &str) -> Result<ColoredPoset, Failure> {
    Ok(parse_poset(&read_input(path)?)?)
}

fn ids(p: &ColoredPoset, xs: impl IntoIterator<Item = usize>) -> Vec<String> {
    xs.into_iter().map(|x| p.id(x).to_owned()).collect()
}

fn check(p: &ColoredPoset) -> Outcome {
    if let Some((completion, w)) = cycle_witness(p) {
        let c = &completion.completed;
        let witness = json!({
            "from": c.id(w.from),
            "to": c.id(w.to),
            "first": ids(c, w.first.iter().copied()),
            "second": ids(c, w.second.iter().copied()),
        });
        let e = Error::NotACFPO(format!("two paths between {} and {}", c.id(w.from), c.id(w.to)));
        return Err(Failure::Domain(e, witness));
    }
    Ok(Output::Json(json!({
        "cfpo": true,
        "components": p.comparability_components().len(),
    })))
}

fn tree_output(result: &TreeifyResult, dot: bool) -> Output {
    if dot {
        Output::Text(emit_dot(&result.tree))
    } else {
        Output::Json(serde_json::to_value(TreeDocument::from_result(result)).expect("serialisable"))
    }
}

fn verdict(p: &ColoredPoset) -> Result<Value, Error> {
    let result = treeify(p)?;
    let preserved = aut_preserved(p, &result.tree)?;
    let back = interpret_back(&result.tree, !p.is_connected())?;
    Ok(json!({
        "aut_preserved": preserved,
        "roundtrip": back == *p,
        "provenance": result.provenance.as_str(),
    }))
}

fn run(cli: Cli) -> Outcome {
    let limits = Limits {
        carrier: cli.materialise_bound,
        ..Limits::default()
    };
    match cli.verb {
        Verb::Check { input } => check(&load(&input)?),
        Verb::Classify { input } => {
            let p = load(&input)?;
            let c = classify(&p)?;
            Ok(Output::Json(json!({
                "n": c.n,
                "witness": {
                    "reversed": c.witness.reversed,
                    "images": ids(&p, c.witness.map.iter().copied()),
                },
            })))
        }
        Verb::Aut { input } => {
            let p = load(&input)?;
            let g = automorphisms(&p);
            let generators: Vec<Vec<String>> =
                g.generators().iter().map(|f| ids(&p, f.images().iter().copied())).collect();
            Ok(Output::Json(json!({
                "elements": p.ids(),
                "generators": generators,
                "order": g.order().to_string(),
            })))
        }
        Verb::Orbits { input, k } => {
            let p = load(&input)?;
            let orbits: Vec<Vec<Vec<String>>> = orbits(&p, k, limits)?
                .into_iter()
                .map(|o| o.into_iter().map(|t| ids(&p, t)).collect())
                .collect();
            Ok(Output::Json(json!({ "k": k, "orbits": orbits })))
        }
        Verb::Fixed { input } => {
            let p = load(&input)?;
            let view = CfpoView::new(&p)?;
            let c = view.completed();
            Ok(Output::Json(json!({
                "fixed": ids(&p, fixed_points(&p)),
                "completion_fixed": ids(c, completion_fixed_points(&view)),
            })))
        }
        Verb::Complete { input } => {
            let p = load(&input)?;
            let completion = complete(&p);
            let marked = completion.marked();
            Ok(Output::Json(json!({
                "poset": PosetDocument::from_poset(&marked),
                "virtual": ids(&marked, completion.virtual_elements()),
            })))
        }
        Verb::Treeify { input, route, root, dot } => {
            let p = load(&input)?;
            let result = match (route, root) {
                (Route::Auto | Route::Fixed, Some(id)) => treeify_fixed_point_by_id(&p, &id)?,
                (Route::Fixed, None) => {
                    let view = CfpoView::new(&p)?;
                    let r = *completion_fixed_points(&view).first().ok_or(Error::NoFixedPoint)?;
                    let id = view.completed().id(r).to_owned();
                    treeify_fixed_point_by_id(&p, &id)?
                }
                (_, Some(_)) => {
                    return Err(Failure::Input("--root applies only to the fixed route".into()));
                }
                (Route::Auto, None) => treeify(&p)?,
                (Route::Odd, None) => treeify_odd(&p)?,
                (Route::Even, None) => treeify_even(&p)?,
                (Route::Disconnected, None) => treeify_disconnected(&p)?,
            };
            Ok(tree_output(&result, dot))
        }
        Verb::Interpret { input } => {
            let (t, has_root) = parse_tree(&read_input(&input)?)?;
            let p = interpret_back(&t, has_root)?;
            Ok(Output::Json(serde_json::to_value(PosetDocument::from_poset(&p)).expect("serialisable")))
        }
        Verb::Verify { input } => {
            let p = load(&input)?;
            let v = verdict(&p)?;
            if v["aut_preserved"] == true && v["roundtrip"] == true {
                Ok(Output::Json(v))
            } else {
                Err(Failure::Domain(Error::VerificationFailed("tree does not reproduce the poset".into()), v))
            }
        }
        Verb::Dot { input, completed } => {
            let p = load(&input)?;
            let shown = if completed { complete(&p).marked() } else { p };
            Ok(Output::Text(emit_dot(&shown)))
        }
        Verb::Enumerate { max_n } => {
            let lines = connected_cfpos(max_n)
                .iter()
                .map(|p| {
                    let status = verdict(p).unwrap_or_else(|e| json!({ "error": e.name(), "message": e.to_string() }));
                    json!({ "poset": PosetDocument::from_poset(p), "verdict": status })
                })
                .collect();
            Ok(Output::Lines(lines))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Output::Json(v)) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Ok(Output::Lines(lines)) => {
            for v in lines {
                println!("{v}");
            }
            ExitCode::SUCCESS
        }
        Ok(Output::Text(s)) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e, detail)) => {
            let mut obj = json!({ "error": e.name(), "message": e.to_string() });
            if !detail.is_null() {
                obj["detail"] = detail;
            }
            println!("{obj}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            println!("{}", json!({ "error": "Malformed", "message": msg }));
            ExitCode::from(2)
        }
    }
}
