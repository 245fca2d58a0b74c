//! The `galois-heights` command line: argument parsing, input files, report
//! emission and exit codes (0 ok, 2 schema, 3 precondition, 4 scale cap,
//! 5 internal invariant).

pub mod cache;
pub mod schema;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, rational_to_string, Rational};
use crate::heights::{enumerate_split_points, height};
use crate::invariants::{invariant_dimension_bruteforce, invariant_dimension_formula};
use crate::lattice::{FractionalIdeal, KLattice, Order};
use crate::pairs::{selfdual_search, GAlgebra, Pair, SearchBox};

use cache::FieldCache;
use schema::{read_json, AlgebraSpec, FieldSpec, GroupSpec, IdealSpec, LatticeSpec, OrderKind, OrderSpec, PairSpec, Ref};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "galois-heights", version, about = "Heights of Galois algebras with normal elements")]
pub struct Cli {
    /// Enclosure radius target is 2^-bits.
    #[arg(long, global = true, default_value_t = 40, value_parser = clap::value_parser!(u32).range(1..=4096))]
    pub precision_bits: u32,
    /// Worker threads for searches (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..=1024))]
    pub parallelism: Option<u64>,
    /// Directory for cached maximal orders.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Height report for a pair file.
    Height { pair: PathBuf },
    /// Discrepancy, bounds and invertibility of an ideal of an order.
    Discrepancy { order: PathBuf, ideal: PathBuf },
    /// Normal points of a split algebra up to a height bound.
    Enumerate {
        group: PathBuf,
        #[arg(long)]
        bound: String,
        /// Write points here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write (bound, count) rows here.
        #[arg(long)]
        checkpoints: Option<PathBuf>,
    },
    /// Degree-|G| invariant dimension by orbit listing and by formula.
    Molien { group: PathBuf },
    /// Self-dual normal elements in a box.
    SelfdualSearch {
        algebra: PathBuf,
        #[arg(long)]
        max_numerator: u32,
        #[arg(long)]
        max_denominator: u32,
        /// Lattice file restricting the search (field algebras).
        #[arg(long)]
        within: Option<PathBuf>,
    },
}

/// Settings shared by every command.
#[derive(Clone, Debug)]
pub struct WorkspaceConfig {
    pub target_radius: Rational,
    pub digits: usize,
    pub cache: Option<PathBuf>,
    pub parallelism: Option<usize>,
    pub format: Option<Format>,
}

impl WorkspaceConfig {
    fn from_cli(cli: &Cli) -> Self {
        let bits = cli.precision_bits;
        WorkspaceConfig {
            target_radius: Rational::new(BigInt::one(), BigInt::one() << bits),
            digits: (bits as usize * 30103).div_ceil(100000) + 3,
            cache: cli.cache_dir.clone(),
            parallelism: cli.parallelism.map(|p| p as usize),
            format: cli.format,
        }
    }

    fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }

    fn field_cache(&self) -> Result<Option<FieldCache>> {
        self.cache.as_deref().map(FieldCache::new).transpose()
    }
}

/// Parse `args` and run; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    let config = WorkspaceConfig::from_cli(&cli);
    let result = match config.parallelism {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(&cli.command, &config)),
            Err(e) => Err(Error::Io(format!("thread pool: {e}"))),
        },
        None => dispatch(&cli.command, &config),
    };
    match result.and_then(|text| out.write_all(text.as_bytes()).map_err(|e| Error::Io(e.to_string()))) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: &Command, config: &WorkspaceConfig) -> Result<String> {
    match cmd {
        Command::Height { pair } => cmd_height(pair, config),
        Command::Discrepancy { order, ideal } => cmd_discrepancy(order, ideal, config),
        Command::Enumerate {
            group,
            bound,
            out,
            checkpoints,
        } => cmd_enumerate(group, bound, out.as_deref(), checkpoints.as_deref(), config),
        Command::Molien { group } => cmd_molien(group, config),
        Command::SelfdualSearch {
            algebra,
            max_numerator,
            max_denominator,
            within,
        } => cmd_selfdual_search(algebra, SearchBox::new(*max_numerator, *max_denominator), within.as_deref(), config),
    }
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(rational_to_string).collect()
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load_field(spec: &Ref<FieldSpec>, base: &Path, config: &WorkspaceConfig) -> Result<crate::field::GaloisAction> {
    let (fs, dir) = spec.resolve(base)?;
    let built = fs.build(&dir)?;
    // prime the field's maximal-order slot from the hint or the cache
    match (config.field_cache()?, &built.hint) {
        (Some(cache), hint) => {
            cache.maximal_order(&built.action, hint.as_ref())?;
        }
        (None, Some(h)) => {
            crate::lattice::maximal_order(built.action.field(), Some(h))?;
        }
        (None, None) => {}
    }
    Ok(built.action)
}

fn load_algebra(spec: &Ref<AlgebraSpec>, base: &Path, config: &WorkspaceConfig) -> Result<GAlgebra> {
    let (a, dir) = spec.resolve(base)?;
    match a {
        AlgebraSpec::Split { split } => {
            let (g, _) = split.resolve(&dir)?;
            Ok(GAlgebra::split(Arc::new(g.build()?)))
        }
        AlgebraSpec::Field { field } => Ok(GAlgebra::field(load_field(&field, &dir, config)?)),
    }
}

pub fn cmd_height(pair_file: &Path, config: &WorkspaceConfig) -> Result<String> {
    let spec: PairSpec = read_json(pair_file)?;
    let base = schema::base_dir(pair_file);
    let algebra = load_algebra(&spec.algebra, &base, config)?;
    let pair = Pair::new(algebra, spec.x()?)?;
    let report = height(&pair, &config.target_radius)?;
    match config.format_or(Format::Json) {
        Format::Json => {
            let mut v = report.to_json(config.digits);
            v["x"] = json!(strings(pair.x()));
            v["split"] = json!(pair.algebra().is_split());
            v["self_dual"] = json!(pair.is_self_dual());
            Ok(pretty(&v))
        }
        Format::Csv => {
            let (hm, hr) = report.height.to_decimal_strings(config.digits);
            let (sm, sr) = report.archimedean_sum.to_decimal_strings(config.digits);
            csv_text(
                &[
                    "height_mid",
                    "height_rad",
                    "archimedean_mid",
                    "archimedean_rad",
                    "finite_part_invariant",
                    "finite_part_direct",
                    "finite_parts_agree",
                ],
                &[vec![
                    hm,
                    hr,
                    sm,
                    sr,
                    rational_to_string(&report.finite_part_invariant),
                    rational_to_string(&report.finite_part_direct),
                    report.finite_parts_agree().to_string(),
                ]],
            )
        }
    }
}

fn build_order(kind: &OrderKind, action: &crate::field::GaloisAction) -> Result<Order> {
    let field = action.field();
    match kind {
        OrderKind::Named(n) if n == "equation" => Ok(Order::equation_order(field)),
        OrderKind::Named(n) if n == "maximal" => Order::maximal(field),
        OrderKind::Named(n) => Err(Error::Schema(format!("unknown order {n:?}; use \"equation\" or \"maximal\""))),
        OrderKind::Generator { .. } => {
            let coords = kind.generator().expect("generator variant")?;
            if coords.len() != field.degree() {
                return Err(Error::Schema(format!("generator must have {} coordinates", field.degree())));
            }
            Order::monogenic(&field.element(coords)?)
        }
        OrderKind::Lattice(l) => Order::new(l.build(field)?),
    }
}

fn build_ideal(spec: &IdealSpec, t: &Order, o: &Order) -> Result<FractionalIdeal> {
    let field = t.field();
    match spec {
        IdealSpec::Named { named } => match named.as_str() {
            "unit" => Ok(t.unit_ideal()),
            "conductor" => t.conductor(o),
            "different" => Ok(t.different()),
            n => Err(Error::Schema(format!("unknown ideal {n:?}; use unit, conductor or different"))),
        },
        IdealSpec::Generators { .. } => {
            let rows = spec.generator_rows().expect("generators variant")?;
            let gens = rows
                .into_iter()
                .map(|r| {
                    if r.len() != field.degree() {
                        return Err(Error::Schema(format!("generators must have {} coordinates", field.degree())));
                    }
                    field.element(r)
                })
                .collect::<Result<Vec<_>>>()?;
            if gens.iter().all(|g| g.is_zero()) {
                return Err(Error::Zero("ideal generators are all zero".into()));
            }
            let nonzero: Vec<_> = gens.into_iter().filter(|g| !g.is_zero()).collect();
            // T-span of the generators: sum over a Z-basis of T times each generator
            let mut acc: Option<KLattice> = None;
            for g in &nonzero {
                let l = t.lattice().mul_element(g)?;
                acc = Some(match acc {
                    Some(a) => a.sum(&l),
                    None => l,
                });
            }
            t.ideal(acc.expect("nonempty"))
        }
        IdealSpec::Lattice(l) => t.ideal(l.build(field)?),
    }
}

pub fn cmd_discrepancy(order_file: &Path, ideal_file: &Path, config: &WorkspaceConfig) -> Result<String> {
    let spec: OrderSpec = read_json(order_file)?;
    let ideal_spec: IdealSpec = read_json(ideal_file)?;
    let base = schema::base_dir(order_file);
    let action = load_field(&spec.field, &base, config)?;
    let t = build_order(&spec.order, &action)?;
    let o = Order::maximal(action.field())?;
    let ideal = build_ideal(&ideal_spec, &t, &o)?;
    let dis = ideal.discrepancy_with(&o)?;
    let order_index = t.index_in(&o)?;
    let conductor_index = crate::lattice::generalized_index(o.lattice(), t.conductor(&o)?.lattice())?;
    let upper = FractionalIdeal::discrepancy_bound(&t, &o)?;
    let within = dis >= Rational::one() && dis <= upper;
    let invertible = ideal.is_invertible();
    let gorenstein = t.is_gorenstein()?;
    let relations = ideal.dvornicich_relations(&o)?;
    match config.format_or(Format::Json) {
        Format::Json => {
            let (den, rows) = ideal.lattice().to_integer_rows();
            let v = json!({
                "norm": rational_to_string(&ideal.norm()),
                "discrepancy": rational_to_string(&dis),
                "bounds": { "lower": "1", "upper": rational_to_string(&upper) },
                "within_bounds": within,
                "order_index": rational_to_string(&order_index),
                "conductor_index": rational_to_string(&conductor_index),
                "invertible": invertible,
                "gorenstein": gorenstein,
                "ideal": {
                    "denominator": den.to_string(),
                    "basis": rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                },
                "relations": relations.iter().map(|r| json!({
                    "left": rational_to_string(&r.left),
                    "right": rational_to_string(&r.right),
                    "holds": r.holds(),
                    "equality": r.is_equality(),
                })).collect::<Vec<_>>(),
            });
            Ok(pretty(&v))
        }
        Format::Csv => csv_text(
            &["norm", "discrepancy", "lower", "upper", "within_bounds", "invertible", "gorenstein"],
            &[vec![
                rational_to_string(&ideal.norm()),
                rational_to_string(&dis),
                "1".into(),
                rational_to_string(&upper),
                within.to_string(),
                invertible.to_string(),
                gorenstein.to_string(),
            ]],
        ),
    }
}

pub fn cmd_enumerate(
    group_file: &Path,
    bound: &str,
    out: Option<&Path>,
    checkpoints: Option<&Path>,
    config: &WorkspaceConfig,
) -> Result<String> {
    let spec: GroupSpec = read_json(group_file)?;
    let group = Arc::new(spec.build()?);
    let bound = parse_rational(bound)?;
    if !bound.is_positive() {
        return Err(Error::Schema("bound must be positive".into()));
    }
    let e = enumerate_split_points(group, &bound)?;
    let bits = (config.digits as u32) * 4 + 8;
    let point_rows: Vec<Vec<String>> = e
        .points
        .iter()
        .map(|p| {
            let (m, r) = p.height(bits).to_decimal_strings(config.digits);
            vec![m, r, p.height_squared.to_string(), strings(&p.x()).join(" ")]
        })
        .collect();
    let check_rows: Vec<Vec<String>> = e
        .checkpoints
        .iter()
        .map(|(b, n)| vec![rational_to_string(b), n.to_string()])
        .collect();
    let text = match config.format_or(Format::Csv) {
        Format::Csv => {
            if let Some(path) = checkpoints {
                write_file(path, &csv_text(&["bound", "count"], &check_rows)?)?;
            }
            csv_text(&["height_mid", "height_rad", "height_squared", "x"], &point_rows)?
        }
        Format::Json => pretty(&json!({
            "group": spec.label(),
            "bound": rational_to_string(&bound),
            "points": point_rows.iter().map(|r| json!({
                "height": { "mid": r[0], "rad": r[1] },
                "height_squared": r[2],
                "x": r[3].split(' ').collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "checkpoints": check_rows.iter().map(|r| json!({ "bound": r[0], "count": r[1] })).collect::<Vec<_>>(),
        })),
    };
    match out {
        Some(path) => {
            write_file(path, &text)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

pub fn cmd_molien(group_file: &Path, config: &WorkspaceConfig) -> Result<String> {
    let spec: GroupSpec = read_json(group_file)?;
    let group = spec.build()?;
    let brute = invariant_dimension_bruteforce(&group)?;
    let formula = invariant_dimension_formula(&group)?;
    let row = vec![
        spec.label(),
        group.order().to_string(),
        brute.to_string(),
        formula.to_string(),
        (brute == formula).to_string(),
    ];
    match config.format_or(Format::Csv) {
        Format::Csv => csv_text(&["group", "order", "dim_bruteforce", "dim_formula", "agree"], &[row]),
        Format::Json => Ok(pretty(&json!({
            "group": spec.label(), "order": group.order(), "dim_bruteforce": brute,
            "dim_formula": formula, "agree": brute == formula,
        }))),
    }
}

pub fn cmd_selfdual_search(
    algebra_file: &Path,
    mut bx: SearchBox,
    within: Option<&Path>,
    config: &WorkspaceConfig,
) -> Result<String> {
    let spec: AlgebraSpec = read_json(algebra_file)?;
    let algebra = load_algebra(&Ref::Inline(spec), &schema::base_dir(algebra_file), config)?;
    if let Some(path) = within {
        if algebra.is_split() {
            return Err(Error::Schema("--within applies to field algebras only".into()));
        }
        let l: LatticeSpec = read_json(path)?;
        bx = bx.within(l.build(algebra.value_field())?);
    }
    let found = selfdual_search(&algebra, &bx);
    match config.format_or(Format::Json) {
        Format::Json => Ok(pretty(&Value::Array(
            found.iter().map(|p| json!({ "x": strings(p.x()) })).collect(),
        ))),
        Format::Csv => csv_text(&["x"], &found.iter().map(|p| vec![strings(p.x()).join(" ")]).collect::<Vec<_>>()),
    }
}

/// Entry point for the binary.
pub fn main_entry() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
