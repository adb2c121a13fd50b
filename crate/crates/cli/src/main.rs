//! Command line front end: enumeration counts, bijections, involutions,
//! Hasse diagrams as DOT and the verification suites.
//!
//! Output is JSON lines by default (`--format csv` or `dot` where it
//! applies), written to stdout or `--out`. All output is byte-identical
//! across runs; `--jobs` only partitions work, never reorders it.

use latticeforge::dot::{covers_from_le, hasse_dot};
use latticeforge::integer_posets::enumerate_posets;
use latticeforge::intervals::{GraftingTree, IntervalPoset};
use latticeforge::perm::{permutations, Permutation};
use latticeforge::permutrees::{enumerate_permutrees, Decoration};
use latticeforge::poly::BivarPoly;
use latticeforge::qt::{
    qt_distribution, schur_expand, AreaSequence, Partition, Statistic, TriangularPartition,
};
use latticeforge::suites::{run_suite, SUITES};
use latticeforge::sweak::{enumerate_trees as s_enumerate, SSequence};
use latticeforge::tamari::{enumerate_trees, BinaryTree};
use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

struct Args {
    positional: Vec<String>,
    flags: BTreeMap<String, String>,
    force: bool,
}

fn parse_args(argv: &[String]) -> Result<Args, String> {
    let mut positional = Vec::new();
    let mut flags = BTreeMap::new();
    let mut force = false;
    let mut it = argv.iter().peekable();
    while let Some(arg) = it.next() {
        if arg == "--force" {
            force = true;
        } else if let Some(name) = arg.strip_prefix("--") {
            let value = it
                .next()
                .ok_or_else(|| format!("flag --{name} needs a value"))?;
            flags.insert(name.to_string(), value.clone());
        } else {
            positional.push(arg.clone());
        }
    }
    Ok(Args {
        positional,
        flags,
        force,
    })
}

impl Args {
    fn flag(&self, name: &str) -> Option<&str> {
        self.flags.get(name).map(|s| s.as_str())
    }

    fn usize_flag(&self, name: &str) -> Result<usize, String> {
        self.flag(name)
            .ok_or_else(|| format!("missing --{name}"))?
            .parse()
            .map_err(|_| format!("--{name} must be an integer"))
    }

    fn s_sequence(&self) -> Result<SSequence, String> {
        self.flag("s")
            .ok_or_else(|| "missing --s".to_string())?
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| "bad --s".to_string()))
            .collect()
    }

    fn decoration(&self) -> Result<Decoration, String> {
        Decoration::parse(
            self.flag("decoration")
                .ok_or_else(|| "missing --decoration".to_string())?,
        )
        .map_err(|e| e.to_string())
    }

    fn partition(&self, name: &str) -> Result<Partition, String> {
        let parts: Result<Vec<u32>, _> = self
            .flag(name)
            .ok_or_else(|| format!("missing --{name}"))?
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|p| p.trim().parse::<u32>())
            .collect();
        Partition::new(parts.map_err(|_| format!("bad --{name}"))?).map_err(|e| e.to_string())
    }

    /// Desk-scale cap with --force and LATTICEFORGE_MAXSIZE overrides.
    fn check_cap(&self, n: usize, default_cap: usize, what: &str) -> Result<(), String> {
        let cap = std::env::var("LATTICEFORGE_MAXSIZE")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
            .unwrap_or(default_cap);
        if n > cap && !self.force {
            return Err(format!(
                "{what} size {n} beyond the desk-scale cap {cap}; pass --force or set LATTICEFORGE_MAXSIZE"
            ));
        }
        Ok(())
    }
}

fn parse_interval(text: &str) -> Result<IntervalPoset, String> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| format!("bad interval JSON: {e}"))?;
    let n = value["n"]
        .as_u64()
        .ok_or_else(|| "interval JSON needs \"n\"".to_string())? as usize;
    let pairs = |key: &str, swap: bool| -> Result<Vec<(u8, u8)>, String> {
        let arr = value[key]
            .as_array()
            .ok_or_else(|| format!("interval JSON needs \"{key}\""))?;
        arr.iter()
            .map(|p| {
                let a = p[0].as_u64().ok_or("bad pair")? as u8;
                let b = p[1].as_u64().ok_or("bad pair")? as u8;
                Ok(if swap { (b, a) } else { (a, b) })
            })
            .collect::<Result<Vec<_>, &str>>()
            .map_err(|e| e.to_string())
    };
    // dec pairs are serialized larger-first
    let inc = pairs("inc", false)?;
    let dec = pairs("dec", true)?;
    IntervalPoset::new(n, inc, dec).map_err(|e| e.to_string())
}

fn parse_grafting(args: &Args) -> Result<GraftingTree, String> {
    let shape = BinaryTree::from_parens(
        args.flag("shape")
            .ok_or_else(|| "missing --shape".to_string())?,
    )
    .map_err(|e| e.to_string())?;
    let labels: Result<Vec<u32>, _> = args
        .flag("labels")
        .ok_or_else(|| "missing --labels".to_string())?
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| p.trim().parse::<u32>())
        .collect();
    GraftingTree::new(shape, labels.map_err(|_| "bad --labels".to_string())?)
        .map_err(|e| e.to_string())
}

fn grafting_json(g: &GraftingTree) -> String {
    let labels: Vec<String> = g.labels().iter().map(|l| l.to_string()).collect();
    format!(
        "{{\"shape\":\"{}\",\"labels\":[{}]}}",
        g.shape().parens(),
        labels.join(",")
    )
}

fn poly_output(p: &BivarPoly, format: Option<&str>) -> String {
    match format {
        Some("csv") => {
            let maxq = p.terms().map(|((q, _), _)| q).max().unwrap_or(0);
            let maxt = p.terms().map(|((_, t), _)| t).max().unwrap_or(0);
            let mut out = String::from("q\\t");
            for t in 0..=maxt {
                out.push_str(&format!(",{t}"));
            }
            out.push('\n');
            for q in 0..=maxq {
                out.push_str(&q.to_string());
                for t in 0..=maxt {
                    out.push_str(&format!(",{}", p.coeff(q, t)));
                }
                out.push('\n');
            }
            out
        }
        _ => format!("{}\n", p.to_json("q", "t")),
    }
}

fn run(args: &Args) -> Result<(String, u8), String> {
    let cmd = args.positional.first().map(|s| s.as_str()).unwrap_or("");
    let sub = args.positional.get(1).map(|s| s.as_str()).unwrap_or("");
    match cmd {
        "count" => run_count(sub, args),
        "map" => run_map(sub, args),
        "invol" => run_invol(sub, args),
        "hasse" => run_hasse(sub, args),
        "qt" => run_qt(sub, args),
        "verify" => run_verify(sub, args),
        _ => Err(usage()),
    }
}

fn usage() -> String {
    [
        "usage: latticeforge <command> ...",
        "  count tamari-intervals --n N [--jobs K]",
        "  count m-intervals --m M --n N",
        "  count permutrees --decoration NDUB-word",
        "  count s-trees --s 0,2,3",
        "  count triangular --n N",
        "  map trees-to-interval --lower PARENS --upper PARENS",
        "  map interval-to-trees --input JSON",
        "  map interval-to-grafting --input JSON",
        "  map grafting-to-interval --shape PARENS --labels L,L,..",
        "  map zeta-inverse --input 0,1,2,..",
        "  map expand|contract --m M --shape PARENS --labels L,L,..",
        "  invol psi|phi|beta --input JSON",
        "  invol beta-m --m M --input JSON",
        "  hasse weak|tamari --n N",
        "  hasse permutree --decoration WORD",
        "  hasse s-weak --s 0,2,2",
        "  hasse integer-poset --n N",
        "  qt distribution|symmetry|schur --shape 3,2,2,1 [--q area --t sim] [--format csv]",
        "  verify <suite> [--n N]   suites: tamari-intervals rise-contact m-tamari zeta",
        "                                   integer-posets permutrees s-weak qt coherence",
        "common flags: --out FILE --format jsonl|csv --jobs K --force",
    ]
    .join("\n")
}

fn run_count(sub: &str, args: &Args) -> Result<(String, u8), String> {
    let count: u128 = match sub {
        "tamari-intervals" => {
            let n = args.usize_flag("n")?;
            args.check_cap(n, 5, "interval enumeration")?;
            let jobs = args
                .flag("jobs")
                .map(|j| j.parse::<usize>().map_err(|_| "bad --jobs".to_string()))
                .transpose()?
                .unwrap_or(1)
                .max(1);
            count_intervals_parallel(n, jobs) as u128
        }
        "m-intervals" => {
            let m = args.usize_flag("m")?;
            let n = args.usize_flag("n")?;
            args.check_cap(m * n, 5, "interval enumeration")?;
            latticeforge::intervals::count_m_intervals(m, n) as u128
        }
        "permutrees" => {
            let delta = args.decoration()?;
            latticeforge::permutrees::count(&delta) as u128
        }
        "s-trees" => {
            let s = args.s_sequence()?;
            latticeforge::sweak::count(&s) as u128
        }
        "triangular" => {
            let n = args.usize_flag("n")?;
            latticeforge::qt::enumerate_triangular(n as u64).len() as u128
        }
        _ => return Err(usage()),
    };
    Ok((format!("{{\"count\":{count}}}\n"), 0))
}

/// Pair counting partitioned over lower trees; the total is order free.
fn count_intervals_parallel(n: usize, jobs: usize) -> usize {
    let trees = enumerate_trees(n);
    if jobs <= 1 || trees.len() < 2 {
        return latticeforge::intervals::count_intervals(n);
    }
    let chunk = trees.len().div_ceil(jobs);
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for lower_chunk in trees.chunks(chunk) {
            let all = &trees;
            handles.push(scope.spawn(move || {
                let mut local = 0usize;
                for lower in lower_chunk {
                    for upper in all {
                        if IntervalPoset::from_tree_pair(lower, upper).is_ok() {
                            local += 1;
                        }
                    }
                }
                local
            }));
        }
        handles.into_iter().map(|h| h.join().expect("worker")).sum()
    })
}

fn run_map(sub: &str, args: &Args) -> Result<(String, u8), String> {
    let out = match sub {
        "trees-to-interval" => {
            let lower = BinaryTree::from_parens(
                args.flag("lower").ok_or_else(|| "missing --lower".to_string())?,
            )
            .map_err(|e| e.to_string())?;
            let upper = BinaryTree::from_parens(
                args.flag("upper").ok_or_else(|| "missing --upper".to_string())?,
            )
            .map_err(|e| e.to_string())?;
            let p = IntervalPoset::from_tree_pair(&lower, &upper).map_err(|e| e.to_string())?;
            format!("{}\n", p.to_json())
        }
        "interval-to-trees" => {
            let p = parse_interval(args.flag("input").ok_or("missing --input")?)?;
            let (lower, upper) = p.to_tree_pair();
            format!(
                "{{\"lower\":\"{}\",\"upper\":\"{}\"}}\n",
                lower.parens(),
                upper.parens()
            )
        }
        "interval-to-grafting" => {
            let p = parse_interval(args.flag("input").ok_or("missing --input")?)?;
            format!("{}\n", grafting_json(&p.to_grafting()))
        }
        "grafting-to-interval" => {
            let g = parse_grafting(args)?;
            let p = g.to_interval().map_err(|e| e.to_string())?;
            format!("{}\n", p.to_json())
        }
        "zeta-inverse" => {
            let values: Result<Vec<u32>, _> = args
                .flag("input")
                .ok_or("missing --input")?
                .split(',')
                .filter(|p| !p.trim().is_empty())
                .map(|p| p.trim().parse::<u32>())
                .collect();
            let a = AreaSequence::new(values.map_err(|_| "bad --input".to_string())?)
                .map_err(|e| e.to_string())?;
            let z = a.zeta_inverse();
            let vals: Vec<String> = z.values().iter().map(|v| v.to_string()).collect();
            format!(
                "{{\"image\":[{}],\"area\":{},\"dinv\":{}}}\n",
                vals.join(","),
                z.area(),
                z.dinv()
            )
        }
        "expand" => {
            let g = parse_grafting(args)?;
            let m = args.usize_flag("m")?;
            format!("{}\n", grafting_json(&g.expand(m).map_err(|e| e.to_string())?))
        }
        "contract" => {
            let g = parse_grafting(args)?;
            let m = args.usize_flag("m")?;
            format!("{}\n", grafting_json(&g.contract(m).map_err(|e| e.to_string())?))
        }
        _ => return Err(usage()),
    };
    Ok((out, 0))
}

fn run_invol(sub: &str, args: &Args) -> Result<(String, u8), String> {
    let p = parse_interval(args.flag("input").ok_or("missing --input")?)?;
    let image = match sub {
        "psi" => p.complement(),
        "phi" => p.left_branch(),
        "beta" => p.rise_contact(),
        "beta-m" => {
            let m = args.usize_flag("m")?;
            p.m_rise_contact(m).map_err(|e| e.to_string())?
        }
        _ => return Err(usage()),
    };
    Ok((format!("{}\n", image.to_json()), 0))
}

fn run_hasse(sub: &str, args: &Args) -> Result<(String, u8), String> {
    let dot = match sub {
        "weak" => {
            let n = args.usize_flag("n")?;
            args.check_cap(n, 8, "weak order")?;
            let elems = permutations(n);
            let names: Vec<String> = elems.iter().map(Permutation::to_string).collect();
            let covers: Vec<(String, String)> = elems
                .iter()
                .flat_map(|p| {
                    p.weak_covers()
                        .into_iter()
                        .map(move |q| (p.to_string(), q.to_string()))
                })
                .collect();
            hasse_dot(&format!("weak-order-{n}"), &names, &covers)
        }
        "tamari" => {
            let n = args.usize_flag("n")?;
            args.check_cap(n, 8, "tree enumeration")?;
            let elems = enumerate_trees(n);
            let names: Vec<String> = elems.iter().map(BinaryTree::parens).collect();
            let covers: Vec<(String, String)> = elems
                .iter()
                .flat_map(|t| {
                    t.tamari_covers()
                        .into_iter()
                        .map(move |q| (t.parens(), q.parens()))
                })
                .collect();
            hasse_dot(&format!("tamari-{n}"), &names, &covers)
        }
        "permutree" => {
            let delta = args.decoration()?;
            args.check_cap(delta.len(), 8, "permutree enumeration")?;
            let elems = enumerate_permutrees(&delta);
            let names: Vec<String> = elems.iter().map(|t| t.min_rep().to_string()).collect();
            let covers: Vec<(String, String)> = elems
                .iter()
                .flat_map(|t| {
                    t.lattice_covers()
                        .into_iter()
                        .map(move |q| (t.min_rep().to_string(), q.min_rep().to_string()))
                })
                .collect();
            hasse_dot(&format!("permutree-{delta}"), &names, &covers)
        }
        "s-weak" => {
            let s = args.s_sequence()?;
            args.check_cap(latticeforge::sweak::count(&s) as usize, 500, "s-weak order")?;
            let elems = s_enumerate(&s);
            let names: Vec<String> = elems.iter().map(|t| t.to_string_nested()).collect();
            let covers: Vec<(String, String)> = elems
                .iter()
                .flat_map(|t| {
                    t.covers()
                        .into_iter()
                        .map(move |q| (t.to_string_nested(), q.to_string_nested()))
                })
                .collect();
            let label: Vec<String> = s.iter().map(|x| x.to_string()).collect();
            hasse_dot(&format!("s-weak-{}", label.join(",")), &names, &covers)
        }
        "integer-poset" => {
            let n = args.usize_flag("n")?;
            args.check_cap(n, 3, "integer poset enumeration")?;
            let elems = enumerate_posets(n);
            let names: Vec<String> = elems.iter().map(|p| p.relation().to_json()).collect();
            let covers: Vec<(String, String)> =
                covers_from_le(&elems, |a, b| a.weak_le(b).expect("same size"))
                    .into_iter()
                    .map(|(i, j)| (names[i].clone(), names[j].clone()))
                    .collect();
            hasse_dot(&format!("integer-posets-{n}"), &names, &covers)
        }
        _ => return Err(usage()),
    };
    Ok((dot, 0))
}

fn parse_stat<'a>(
    name: Option<&str>,
    default: &str,
    theta: &'a latticeforge::qt::Tableau,
) -> Result<Statistic<'a>, String> {
    match name.unwrap_or(default) {
        "area" => Ok(Statistic::Area),
        "sim" => Ok(Statistic::Sim),
        "deficit" => Ok(Statistic::Deficit(theta)),
        other => Err(format!("unknown statistic {other}")),
    }
}

fn run_qt(sub: &str, args: &Args) -> Result<(String, u8), String> {
    let lambda = args.partition("shape")?;
    let tri = TriangularPartition::new(lambda).map_err(|e| e.to_string())?;
    let theta = tri.triangular_tableau();
    let q = parse_stat(args.flag("q"), "area", &theta)?;
    let t = parse_stat(args.flag("t"), "sim", &theta)?;
    let poly = qt_distribution(&tri, q, t).map_err(|e| e.to_string())?;
    match sub {
        "distribution" => Ok((poly_output(&poly, args.flag("format")), 0)),
        "symmetry" => {
            let symmetric = poly.is_symmetric();
            Ok((
                format!("{{\"symmetric\":{symmetric}}}\n"),
                if symmetric { 0 } else { 2 },
            ))
        }
        "schur" => {
            let coeffs = schur_expand(&poly).map_err(|e| e.to_string())?;
            let items: Vec<String> = coeffs
                .iter()
                .map(|((a, b), c)| format!("\"({a},{b})\":{c}"))
                .collect();
            let positive = coeffs.iter().all(|&(_, c)| c >= 0);
            Ok((
                format!(
                    "{{\"coefficients\":{{{}}},\"schur_positive\":{positive}}}\n",
                    items.join(",")
                ),
                0,
            ))
        }
        _ => Err(usage()),
    }
}

fn run_verify(sub: &str, args: &Args) -> Result<(String, u8), String> {
    let limit = args.flag("n").map(|v| v.parse::<usize>().map_err(|_| "bad --n".to_string()));
    let limit = match limit {
        Some(Ok(v)) => Some(v),
        Some(Err(e)) => return Err(e),
        None => None,
    };
    let names: Vec<&str> = if sub == "all" {
        SUITES.to_vec()
    } else {
        vec![sub]
    };
    let mut out = String::new();
    let mut failed = false;
    for name in names {
        let checks = run_suite(name, limit).ok_or_else(|| {
            format!("unknown suite {name}; known: {}", SUITES.join(", "))
        })?;
        for c in checks {
            out.push_str(&format!(
                "{} {name} :: {} ({})\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            ));
            failed |= !c.pass;
        }
    }
    Ok((out, if failed { 2 } else { 0 }))
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let args = match parse_args(&argv) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(&args) {
        Ok((output, code)) => {
            if let Some(path) = args.flag("out") {
                if let Err(e) = std::fs::write(path, &output) {
                    eprintln!("cannot write {path}: {e}");
                    return ExitCode::from(1);
                }
            } else {
                let mut stdout = std::io::stdout().lock();
                if stdout.write_all(output.as_bytes()).is_err() {
                    return ExitCode::from(1);
                }
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
    }
}
