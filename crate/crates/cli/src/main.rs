//! Command-line front end: class counting, grids, cores, polygons, series,
//! triangles, cross-checks and b-file comparison.
//!
//! Exit codes: 0 success, 1 check failure (a witness is printed), 2 usage
//! error. Output is byte-stable for fixed inputs.

mod oeis;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use permcores::cores::{build_core, CoreGraph, CoreVariant};
use permcores::grids::{BoundaryGrid, GridBox, StaircaseEncoding};
use permcores::oracle::{
    self, check_disjoint_union, check_encoding_bijection, check_nonintersecting_many,
    check_purity, check_quad_structure, check_smooth_structure, check_vincular, CheckLimits,
    CheckReport, EncodingClass, UnionFamily,
};
use permcores::perm::{count_avoiders, count_vincular_avoiders, PatternBasis, Permutation, VincularPattern};
use permcores::series::BiSeries;
use permcores::tables::{ind_set_triangle, narayana_table, sequence, CountTable};

#[derive(Parser)]
#[command(name = "permcores", version, about = "Pattern-class enumeration via grid cores")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Allow bounds beyond the documented desk limits.
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Permutation utilities: standardise, containment, boundary, skew sum.
    Perm(PermCmd),
    /// Count pattern avoiders length by length.
    Avoid(AvoidCmd),
    /// Build grids and print their boxes.
    Grid(GridCmd),
    /// Core graphs: edges, cliques, independent sets, purity.
    Core(CoreCmd),
    /// Non-crossing subgraph counts and the vertex-edge bijection.
    Polygon(PolygonCmd),
    /// Print a generating-function expansion.
    Series(SeriesCmd),
    /// Counting triangles.
    Triangle(TriangleCmd),
    /// Run a named cross-check (or all of them).
    Check(CheckCmd),
    /// Compare a generated sequence against an OEIS b-file.
    Oeis(OeisCmd),
}

#[derive(Args)]
struct PermCmd {
    #[command(subcommand)]
    cmd: PermSub,
}

#[derive(Subcommand)]
enum PermSub {
    /// Standardise a word of distinct integers.
    Std { word: String },
    /// Test pattern containment; brackets mark bonded positions.
    Contains {
        host: String,
        pattern: String,
        /// List all occurrences as position tuples.
        #[arg(long)]
        occurrences: bool,
    },
    /// Boundary permutation (minima and maxima, standardised).
    Boundary { perm: String },
    /// Maximal skew decomposition.
    Skew { perm: String },
    /// Boundary statistics: minima, maxima, boundary type.
    Stats { perm: String },
}

#[derive(Args)]
struct AvoidCmd {
    #[command(subcommand)]
    cmd: AvoidSub,
}

#[derive(Subcommand)]
enum AvoidSub {
    /// Count avoiders of the given patterns for each length up to the bound.
    Count {
        /// Patterns to avoid; brackets mark bonded positions (e.g. `1[23]4`).
        #[arg(long = "pattern", required = true)]
        patterns: Vec<String>,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
}

#[derive(Args)]
struct GridCmd {
    #[command(subcommand)]
    cmd: GridSub,
}

#[derive(Subcommand)]
enum GridSub {
    /// Build a grid: staircase:A, eb:A, ni:A,B, eni:A,B or bg:PERM.
    Build {
        grid: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Staircase encoding of a permutation.
    Encode {
        perm: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Rebuild the unique class member with a given encoding.
    Reconstruct {
        /// 132 or 123.
        #[arg(long)]
        class: String,
        /// Staircase size.
        #[arg(long)]
        size: usize,
        /// Semicolon-separated row,col,count triples, e.g. "1,3,1;2,2,1".
        #[arg(long)]
        counts: String,
    },
}

#[derive(Args)]
struct CoreCmd {
    #[command(subcommand)]
    cmd: CoreSub,
}

#[derive(Clone, Args)]
struct CoreSelect {
    /// Grid spec: staircase:A, eb:A, ni:A,B, eni:A,B or bg:PERM.
    #[arg(long)]
    grid: String,
    #[arg(long, default_value = "down")]
    variant: String,
}

#[derive(Subcommand)]
enum CoreSub {
    /// Print the core graph (vertex legend plus "u v" edge lines).
    Build {
        #[command(flatten)]
        select: CoreSelect,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Clique counts by size.
    Cliques {
        #[command(flatten)]
        select: CoreSelect,
        /// Print a single size instead of the whole profile.
        #[arg(long)]
        size: Option<usize>,
    },
    /// Independent-set counts by size.
    Indsets {
        #[command(flatten)]
        select: CoreSelect,
    },
    /// Whether all maximal independent sets share one cardinality.
    Purity {
        #[command(flatten)]
        select: CoreSelect,
    },
}

#[derive(Args)]
struct PolygonCmd {
    #[command(subcommand)]
    cmd: PolygonSub,
}

#[derive(Subcommand)]
enum PolygonSub {
    /// Count non-crossing subgraphs of the polygon with n+1 vertices.
    Noncrossing {
        #[arg(long)]
        n: usize,
        /// Restrict to a single edge count.
        #[arg(long)]
        edges: Option<usize>,
    },
    /// Verify the adjacency-crossing correspondence for all sizes up to the bound.
    VerifyStar {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
}

#[derive(Args)]
struct SeriesCmd {
    /// One of f, g, pind, p, r, qup, qind, q, sup, sind, s, h, i, j, eq2.
    name: String,
    #[arg(long, default_value_t = 8)]
    order: usize,
    /// Substitution applied before printing: y=x or y=x/(1-x).
    #[arg(long)]
    subst: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct TriangleCmd {
    /// narayana or a262370.
    name: String,
    #[arg(long, default_value_t = 12)]
    rows: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Starting index for b-file output.
    #[arg(long, default_value_t = 1)]
    offset: i64,
}

#[derive(Args)]
struct CheckCmd {
    /// encoding-132, encoding-123, disjoint-union, nonintersecting, purity,
    /// vincular, smooth-structure, quad-structure or all.
    name: String,
    #[arg(long)]
    max_n: Option<usize>,
    /// Boundary family for disjoint-union: 1324-2143, 1234-1324-2143 or
    /// 1234-1324-1432-3214.
    #[arg(long)]
    family: Option<String>,
    /// Number of right-to-left maxima for nonintersecting (1, 2 or 3).
    #[arg(long)]
    rlm: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct OeisCmd {
    #[command(subcommand)]
    cmd: OeisSub,
}

#[derive(Subcommand)]
enum OeisSub {
    /// Compare a generator against a vendored (or fetched) b-file.
    Compare {
        /// Sequence id, e.g. A001263.
        seq_id: String,
        /// Generator: narayana, a262370, altfib, eq5, eq6, pascal12,
        /// catalan, type-a2 or type-a3.
        generator: String,
        /// Number of terms to compare (defaults to the b-file length).
        #[arg(long)]
        terms: Option<usize>,
        /// Compare against a local b-file instead of the vendored one.
        #[arg(long)]
        fixture: Option<String>,
        /// Fetch the b-file from the OEIS over plain HTTP.
        #[arg(long)]
        fetch: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Bfile,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    let force = cli.force;
    match cli.cmd {
        Cmd::Perm(c) => run_perm(c),
        Cmd::Avoid(c) => run_avoid(c, force),
        Cmd::Grid(c) => run_grid(c),
        Cmd::Core(c) => run_core(c),
        Cmd::Polygon(c) => run_polygon(c, force),
        Cmd::Series(c) => run_series(c, force),
        Cmd::Triangle(c) => run_triangle(c, force),
        Cmd::Check(c) => run_check(c, force),
        Cmd::Oeis(c) => run_oeis(c),
    }
}

fn parse_perm(s: &str) -> Result<Permutation, String> {
    Permutation::from_str(s).map_err(|e| e.to_string())
}

fn parse_grid(spec: &str) -> Result<BoundaryGrid, String> {
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| format!("grid spec {spec:?} needs the form kind:args"))?;
    let nums = |s: &str| -> Result<Vec<usize>, String> {
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| e.to_string()))
            .collect()
    };
    match kind {
        "staircase" => Ok(BoundaryGrid::staircase(
            rest.parse::<usize>().map_err(|e| e.to_string())?,
        )),
        "eb" => BoundaryGrid::extended_staircase(rest.parse().map_err(|e: std::num::ParseIntError| e.to_string())?)
            .map_err(|e| e.to_string()),
        "ni" => {
            let v = nums(rest)?;
            if v.len() != 2 {
                return Err("ni grid needs two sizes, e.g. ni:2,3".into());
            }
            BoundaryGrid::nonintersecting(v[0], v[1]).map_err(|e| e.to_string())
        }
        "eni" => {
            let v = nums(rest)?;
            if v.len() != 2 {
                return Err("eni grid needs two sizes, e.g. eni:2,3".into());
            }
            BoundaryGrid::extended_nonintersecting(v[0], v[1]).map_err(|e| e.to_string())
        }
        "bg" => {
            let p = parse_perm(rest)?;
            BoundaryGrid::boundary_grid(&p).map_err(|e| e.to_string())
        }
        other => Err(format!("unknown grid kind {other:?}")),
    }
}

fn parse_variant(s: &str) -> Result<CoreVariant, String> {
    CoreVariant::from_str(s)
}

fn build_selected(select: &CoreSelect) -> Result<CoreGraph, String> {
    let grid = parse_grid(&select.grid)?;
    let variant = parse_variant(&select.variant)?;
    build_core(&grid, variant).map_err(|e| e.to_string())
}

fn run_perm(c: PermCmd) -> Result<u8, String> {
    match c.cmd {
        PermSub::Std { word } => {
            let parts: Vec<i64> = if word.contains(',') {
                word.split(',')
                    .map(|t| t.trim().parse::<i64>().map_err(|e| e.to_string()))
                    .collect::<Result<_, _>>()?
            } else {
                word.chars()
                    .map(|ch| {
                        ch.to_digit(10)
                            .map(|d| d as i64)
                            .ok_or_else(|| format!("bad digit {ch:?} in word"))
                    })
                    .collect::<Result<_, _>>()?
            };
            let p = Permutation::standardise(&parts).map_err(|e| e.to_string())?;
            println!("{p}");
            Ok(0)
        }
        PermSub::Contains {
            host,
            pattern,
            occurrences,
        } => {
            let host = parse_perm(&host)?;
            let vp: VincularPattern = pattern.parse().map_err(|e: permcores::PermError| e.to_string())?;
            if occurrences {
                for occ in host.occurrences_vincular(&vp) {
                    let parts: Vec<String> = occ.iter().map(|p| p.to_string()).collect();
                    println!("{}", parts.join(","));
                }
            }
            println!("{}", host.contains_vincular(&vp));
            Ok(0)
        }
        PermSub::Boundary { perm } => {
            let p = parse_perm(&perm)?;
            println!("{}", p.boundary());
            Ok(0)
        }
        PermSub::Skew { perm } => {
            let p = parse_perm(&perm)?;
            let parts: Vec<String> = p.skew_components().iter().map(|c| c.to_string()).collect();
            println!("{}", parts.join(" - "));
            println!("indecomposable: {}", p.is_skew_indecomposable());
            Ok(0)
        }
        PermSub::Stats { perm } => {
            let p = parse_perm(&perm)?;
            let vals = |positions: Vec<usize>| -> String {
                let parts: Vec<String> = positions.iter().map(|&i| p.at(i).to_string()).collect();
                parts.join(",")
            };
            println!("length: {}", p.len());
            println!("lr minima values: {}", vals(p.lr_minima()));
            println!("rl maxima values: {}", vals(p.rl_maxima()));
            println!("boundary: {}", p.boundary());
            match p.boundary_type() {
                Some((a, b)) => println!("non-intersecting boundary type: ({a},{b})"),
                None => println!("non-intersecting boundary type: none"),
            }
            Ok(0)
        }
    }
}

fn run_avoid(c: AvoidCmd, force: bool) -> Result<u8, String> {
    match c.cmd {
        AvoidSub::Count { patterns, max_n } => {
            desk_limit("avoid count --max-n", max_n, 12, force)?;
            let vps: Result<Vec<VincularPattern>, _> =
                patterns.iter().map(|s| s.parse()).collect();
            let vps = vps.map_err(|e: permcores::PermError| e.to_string())?;
            let classical = vps.iter().all(|vp| vp.bonds().is_empty());
            for n in 0..=max_n {
                let count = if classical {
                    let basis =
                        PatternBasis::new(vps.iter().map(|vp| vp.pattern().clone()).collect());
                    count_avoiders(n, &basis)
                } else {
                    count_vincular_avoiders(n, &vps)
                };
                println!("{n} {count}");
            }
            Ok(0)
        }
    }
}

fn run_grid(c: GridCmd) -> Result<u8, String> {
    match c.cmd {
        GridSub::Build { grid, format } => {
            let g = parse_grid(&grid)?;
            match format {
                Format::Json => println!("{}", g.to_json()),
                _ => {
                    println!("boxes: {}", g.len());
                    print!("{}", g.ascii_art());
                }
            }
            Ok(0)
        }
        GridSub::Encode { perm, format } => {
            let p = parse_perm(&perm)?;
            let enc = StaircaseEncoding::of(&p);
            match format {
                Format::Json => println!("{}", enc.to_json()),
                _ => {
                    println!("size: {}", enc.size());
                    for (b, count) in enc.counts() {
                        println!("{},{} {count}", b.row, b.col);
                    }
                }
            }
            Ok(0)
        }
        GridSub::Reconstruct {
            class,
            size,
            counts,
        } => {
            let class = match class.as_str() {
                "132" => EncodingClass::Av132,
                "123" => EncodingClass::Av123,
                other => return Err(format!("unknown class {other:?}, expected 132 or 123")),
            };
            let mut map = BTreeMap::new();
            for triple in counts.split(';').filter(|t| !t.trim().is_empty()) {
                let nums: Result<Vec<usize>, _> =
                    triple.split(',').map(|t| t.trim().parse::<usize>()).collect();
                let nums = nums.map_err(|e| e.to_string())?;
                if nums.len() != 3 {
                    return Err(format!("count triple {triple:?} needs row,col,count"));
                }
                map.insert(GridBox::new(nums[0], nums[1]), nums[2]);
            }
            let enc = StaircaseEncoding::new(size, map).map_err(|e| e.to_string())?;
            let p = oracle::reconstruct(&enc, class).map_err(|e| e.to_string())?;
            println!("{p}");
            Ok(0)
        }
    }
}

fn print_profile(profile: &[BigUint], single: Option<usize>) {
    match single {
        Some(k) => println!("{}", profile.get(k).cloned().unwrap_or_default()),
        None => {
            for (k, count) in profile.iter().enumerate() {
                println!("{k} {count}");
            }
        }
    }
}

fn run_core(c: CoreCmd) -> Result<u8, String> {
    match c.cmd {
        CoreSub::Build { select, format } => {
            let core = build_selected(&select)?;
            match format {
                Format::Json => println!("{}", core.to_json()),
                _ => {
                    for (i, b) in core.boxes().iter().enumerate() {
                        println!("# {i} = {b}");
                    }
                    print!("{}", core.to_edge_text());
                }
            }
            Ok(0)
        }
        CoreSub::Cliques { select, size } => {
            let core = build_selected(&select)?;
            print_profile(&core.graph().clique_profile(), size);
            Ok(0)
        }
        CoreSub::Indsets { select } => {
            let core = build_selected(&select)?;
            print_profile(&core.independent_set_profile(), None);
            Ok(0)
        }
        CoreSub::Purity { select } => {
            let core = build_selected(&select)?;
            println!("{}", if core.is_pure() { "pure" } else { "not pure" });
            Ok(0)
        }
    }
}

fn run_polygon(c: PolygonCmd, force: bool) -> Result<u8, String> {
    match c.cmd {
        PolygonSub::Noncrossing { n, edges } => {
            desk_limit("polygon noncrossing --n", n, 9, force)?;
            print_profile(&permcores::polygon::noncrossing_profile(n), edges);
            Ok(0)
        }
        PolygonSub::VerifyStar { max_n } => {
            desk_limit("polygon verify-star --max-n", max_n, 10, force)?;
            for n in 1..=max_n {
                if !permcores::polygon::verify_star(n) {
                    println!("FAILED at n={n}");
                    return Ok(1);
                }
            }
            println!("verified for 1..={max_n}");
            Ok(0)
        }
    }
}

fn run_series(c: SeriesCmd, force: bool) -> Result<u8, String> {
    desk_limit("series --order", c.order, 40, force)?;
    let n = c.order;
    let series: BiSeries = match c.name.to_lowercase().as_str() {
        "f" => permcores::series::solve_f(n, n),
        "g" => permcores::series::smooth_family(n, n).g,
        "pind" => permcores::series::smooth_family(n, n).p_ind,
        "p" => permcores::series::smooth_family(n, n).p,
        "r" => permcores::series::updown_family(n, n).r,
        "qup" | "qdown" => permcores::series::updown_family(n, n).q_up,
        "qind" => permcores::series::updown_family(n, n).q_ind,
        "q" => permcores::series::updown_family(n, n).q,
        "sup" | "sdown" => permcores::series::four_pattern_family(n, n).s_up,
        "sind" => permcores::series::four_pattern_family(n, n).s_ind,
        "s" => permcores::series::four_pattern_family(n, n).s,
        "h" => permcores::series::nonintersecting_family(n, n).h,
        "i" => permcores::series::nonintersecting_family(n, n).i,
        "j" => permcores::series::nonintersecting_family(n, n).j,
        "eq2" => permcores::series::narayana_closed_series(n, n),
        other => return Err(format!("unknown series {other:?}")),
    };
    let substituted = match c.subst.as_deref() {
        None => None,
        Some("y=x") => {
            let x = BiSeries::var_x(n, n);
            Some(series.subst_y(&x).map_err(|e| e.to_string())?)
        }
        Some("y=x/(1-x)") => {
            let one = BiSeries::one(n, n);
            let x = BiSeries::var_x(n, n);
            let geom = x.div(&one.sub(&x)).map_err(|e| e.to_string())?;
            Some(series.subst_y(&geom).map_err(|e| e.to_string())?)
        }
        Some(other) => return Err(format!("unknown substitution {other:?}")),
    };
    match substituted {
        Some(s) => {
            for (i, c) in s.x_row(0).iter().enumerate() {
                println!("{i} {c}");
            }
        }
        None => match c.format {
            Format::Json => {
                let terms: Vec<serde_json::Value> = series
                    .terms()
                    .iter()
                    .map(|(i, j, c)| serde_json::json!([i, j, c.to_string()]))
                    .collect();
                println!("{}", serde_json::Value::Array(terms));
            }
            _ => {
                for (i, j, c) in series.terms() {
                    println!("x^{i} y^{j} {c}");
                }
            }
        },
    }
    Ok(0)
}

fn run_triangle(c: TriangleCmd, force: bool) -> Result<u8, String> {
    desk_limit("triangle --rows", c.rows, 64, force)?;
    let table: CountTable = match c.name.as_str() {
        "narayana" => narayana_table(c.rows),
        "a262370" => ind_set_triangle(c.rows),
        other => return Err(format!("unknown triangle {other:?}")),
    };
    match c.format {
        Format::Csv => print!("{}", table.to_csv()),
        Format::Bfile => print!("{}", table.to_bfile(c.offset)),
        Format::Json => {
            let rows: Vec<Vec<String>> = table
                .rows
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect())
                .collect();
            println!("{}", serde_json::json!({"label": table.label, "rows": rows}));
        }
        Format::Text => print!("{}", table.to_text()),
    }
    Ok(0)
}

fn emit_reports(reports: &[CheckReport], format: Format) -> u8 {
    if format == Format::Json {
        let arr: Vec<serde_json::Value> = reports.iter().map(|r| r.to_json()).collect();
        println!("{}", serde_json::Value::Array(arr));
    } else {
        for r in reports {
            println!("{} [{}]: {}", r.name, r.params, r.status());
            if let Some(w) = &r.witness {
                println!("  witness: {w}");
            }
        }
    }
    if reports.iter().all(|r| r.passed) {
        0
    } else {
        1
    }
}

fn run_check(c: CheckCmd, force: bool) -> Result<u8, String> {
    let reports: Vec<CheckReport> = match c.name.as_str() {
        "all" => {
            let limits = match c.max_n {
                Some(n) => CheckLimits::clamped(n),
                None => CheckLimits::default(),
            };
            oracle::run_all_checks(&limits)
        }
        "encoding-132" | "encoding-123" => {
            let n = c.max_n.unwrap_or(CheckLimits::default().encoding);
            desk_limit("check --max-n", n, 10, force)?;
            let class = if c.name.ends_with("132") {
                EncodingClass::Av132
            } else {
                EncodingClass::Av123
            };
            vec![check_encoding_bijection(n, class)]
        }
        "disjoint-union" => {
            let n = c.max_n.unwrap_or(CheckLimits::default().disjoint_union);
            desk_limit("check --max-n", n, 10, force)?;
            let families: Vec<UnionFamily> = match c.family.as_deref() {
                None => vec![
                    UnionFamily::Smooth,
                    UnionFamily::Updown2143,
                    UnionFamily::FourPattern,
                ],
                Some("1324-2143") => vec![UnionFamily::Smooth],
                Some("1234-1324-2143") => vec![UnionFamily::Updown2143],
                Some("1234-1324-1432-3214") => vec![UnionFamily::FourPattern],
                Some(other) => return Err(format!("unknown family {other:?}")),
            };
            families
                .into_iter()
                .map(|f| check_disjoint_union(n, f))
                .collect()
        }
        "nonintersecting" => {
            let n = c.max_n.unwrap_or(CheckLimits::default().nonintersecting);
            desk_limit("check --max-n", n, 11, force)?;
            let bs: Vec<usize> = match c.rlm {
                Some(b) if (1..=3).contains(&b) => vec![b],
                Some(b) => return Err(format!("--rlm {b} out of range 1..=3")),
                None => vec![1, 2, 3],
            };
            vec![check_nonintersecting_many(n, &bs)]
        }
        "purity" => {
            let n = c.max_n.unwrap_or(CheckLimits::default().purity);
            desk_limit("check --max-n", n, 7, force)?;
            vec![check_purity(n)]
        }
        "vincular" => {
            let n = c.max_n.unwrap_or(CheckLimits::default().vincular);
            desk_limit("check --max-n", n, 10, force)?;
            vec![check_vincular(n)]
        }
        "smooth-structure" => {
            let n = c.max_n.unwrap_or(CheckLimits::default().structure);
            desk_limit("check --max-n", n, 10, force)?;
            vec![check_smooth_structure(n)]
        }
        "quad-structure" => {
            let n = c.max_n.unwrap_or(CheckLimits::default().structure);
            desk_limit("check --max-n", n, 10, force)?;
            vec![check_quad_structure(n)]
        }
        other => return Err(format!("unknown check {other:?}")),
    };
    Ok(emit_reports(&reports, c.format))
}

fn run_oeis(c: OeisCmd) -> Result<u8, String> {
    match c.cmd {
        OeisSub::Compare {
            seq_id,
            generator,
            terms,
            fixture,
            fetch,
        } => {
            let bfile = if let Some(path) = fixture {
                std::fs::read_to_string(&path).map_err(|e| format!("{path}: {e}"))?
            } else if fetch {
                oeis::fetch_bfile(&seq_id)?
            } else {
                oeis::vendored_bfile(&seq_id)
                    .ok_or_else(|| format!("no vendored b-file for {seq_id}; pass --fixture or --fetch"))?
                    .to_string()
            };
            let expected = oeis::parse_bfile(&bfile)?;
            let count = terms.unwrap_or(expected.len()).min(expected.len());
            let generated = sequence(&generator, count)
                .ok_or_else(|| format!("unknown generator {generator:?}"))?;
            for (pos, (index, want)) in expected.iter().take(count).enumerate() {
                let got = &generated[pos];
                if got.to_string() != *want {
                    println!(
                        "MISMATCH at index {index}: generated {got}, b-file has {want}"
                    );
                    return Ok(1);
                }
            }
            println!("{seq_id} matches {generator} on {count} terms");
            Ok(0)
        }
    }
}

fn desk_limit(what: &str, value: usize, limit: usize, force: bool) -> Result<(), String> {
    if value > limit && !force {
        return Err(format!(
            "{what} {value} exceeds the desk limit {limit}; pass --force to override"
        ));
    }
    Ok(())
}
