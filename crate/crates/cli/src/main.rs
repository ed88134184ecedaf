//! Command line front end.
//!
//! Every command reads one JSON document, runs one exact computation and
//! emits one report. Exit codes separate three situations that must never
//! be conflated: 0 means the mathematical question was answered positively,
//! 1 means it was answered negatively (laws fail, class nonzero, no lift,
//! or the computation itself rejected the data), 2 means the input never
//! reached the mathematics (unreadable file, malformed document).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use leibniz2::{
    aut_induce, build_extension, cohomology, der_induce, extensions_equivalent, extract_cocycle,
    find_splitting, is_cocycle2, verify_algebra, verify_representation, verify_xmod, wells_aut,
    wells_der, xmod_aut_induce, xmod_der_induce, xmod_to_strict, xmod_wells_aut, xmod_wells_der,
    AutPair, Cochain2, CrossedModule, DerPair, Derivation2, Error, Extension, Hom2,
    Representation, Scalar, WellsReport, XModPair, XModRep,
};
use leibniz2_cli::report::{self, Format};
use leibniz2_cli::schema::{parse_document, Doc, ExtensionBlock, PairBlock, Req, Requirements};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "leibniz2",
    version,
    about = "Exact verification, cohomology and lifting for Leibniz 2-algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the structure laws of an algebra
    Verify(CommonArgs),
    /// Cocycle and coboundary spaces with degree-two representatives
    Cohomology(CommonArgs),
    /// Build the abelian extension classified by a 2-cocycle
    Extend(CommonArgs),
    /// Recover a 2-cocycle from an extension through a splitting
    Extract(CommonArgs),
    /// Decide whether two extensions of the same pair are equivalent
    Equiv(CommonArgs),
    /// Lift an automorphism pair through an extension
    InduceAut(CommonArgs),
    /// Lift a derivation pair through an extension
    InduceDer(CommonArgs),
    /// Obstruction class of an automorphism pair against a cocycle
    WellsAut(CommonArgs),
    /// Obstruction class of a derivation pair against a cocycle
    WellsDer(CommonArgs),
    /// Check the crossed module laws
    XmodVerify(CommonArgs),
    /// Lift a strict automorphism pair over a crossed module
    XmodInduceAut(CommonArgs),
    /// Lift a strict derivation pair over a crossed module
    XmodInduceDer(CommonArgs),
    /// Obstruction class of a strict automorphism pair
    XmodWellsAut(CommonArgs),
    /// Obstruction class of a strict derivation pair
    XmodWellsDer(CommonArgs),
}

impl Command {
    fn parts(&self) -> (&'static str, &CommonArgs) {
        match self {
            Command::Verify(a) => ("verify", a),
            Command::Cohomology(a) => ("cohomology", a),
            Command::Extend(a) => ("extend", a),
            Command::Extract(a) => ("extract", a),
            Command::Equiv(a) => ("equiv", a),
            Command::InduceAut(a) => ("induce-aut", a),
            Command::InduceDer(a) => ("induce-der", a),
            Command::WellsAut(a) => ("wells-aut", a),
            Command::WellsDer(a) => ("wells-der", a),
            Command::XmodVerify(a) => ("xmod-verify", a),
            Command::XmodInduceAut(a) => ("xmod-induce-aut", a),
            Command::XmodInduceDer(a) => ("xmod-induce-der", a),
            Command::XmodWellsAut(a) => ("xmod-wells-aut", a),
            Command::XmodWellsDer(a) => ("xmod-wells-der", a),
        }
    }
}

#[derive(Args)]
struct CommonArgs {
    /// Input document (JSON)
    #[arg(long)]
    input: PathBuf,
    /// Write the report to this file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// Report format
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

fn requirements(name: &str) -> Requirements {
    let mut r = Requirements::none();
    match name {
        "verify" => {
            r.algebra = Req::Required;
        }
        "cohomology" => {
            r.algebra = Req::Required;
            r.representation = Req::Required;
        }
        "extend" => {
            r.algebra = Req::Required;
            r.representation = Req::Required;
            r.cocycle = Req::Required;
        }
        "extract" => {
            r.extension = Req::Required;
            r.splitting = Req::Optional;
        }
        "equiv" => {
            r.extension = Req::Required;
            r.extension_b = Req::Required;
        }
        "induce-aut" | "induce-der" => {
            r.extension = Req::Required;
            r.pair = Req::Required;
        }
        "wells-aut" | "wells-der" => {
            r.algebra = Req::Required;
            r.representation = Req::Required;
            r.cocycle = Req::Required;
            r.pair = Req::Required;
        }
        "xmod-verify" => {
            r.crossed_module = Req::Required;
        }
        "xmod-induce-aut" | "xmod-induce-der" | "xmod-wells-aut" | "xmod-wells-der" => {
            r.crossed_module = Req::Required;
            r.representation = Req::Required;
            r.cocycle = Req::Required;
            r.pair = Req::Required;
            r.pair_allows_alpha2 = false;
        }
        _ => unreachable!("unknown command {name}"),
    }
    r
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, args) = cli.command.parts();
    match run(name, args) {
        Ok((value, ok)) => {
            let format = match args.format {
                FormatArg::Json => Format::Json,
                FormatArg::Text => Format::Text,
            };
            let rendered = report::render(&value, format);
            match &args.output {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &rendered) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{rendered}"),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(errors) => {
            for e in &errors {
                eprintln!("error: {e}");
            }
            ExitCode::from(2)
        }
    }
}

/// Full pipeline up to rendering: read, validate, compute, wrap. The bool
/// distinguishes exit 0 from exit 1; schema-level failures return `Err` and
/// exit 2 without producing a report.
fn run(name: &'static str, args: &CommonArgs) -> Result<(Value, bool), Vec<String>> {
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| vec![format!("cannot read {}: {e}", args.input.display())])?;
    let doc = parse_document(&text, &requirements(name))?;
    let (status, fields) = match dispatch(name, doc) {
        Ok((s, f)) => (s, f),
        Err(e) => ("error", json!({ "message": e.to_string() })),
    };
    let ok = matches!(status, "ok" | "equivalent" | "inducible" | "zero_class");
    Ok((envelope(name, status, fields), ok))
}

fn envelope(name: &str, status: &str, fields: Value) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("command".into(), json!(name));
    map.insert("schema_version".into(), json!("1"));
    map.insert("status".into(), json!(status));
    if let Value::Object(extra) = fields {
        for (k, v) in extra {
            map.insert(k, v);
        }
    }
    Value::Object(map)
}

fn dispatch(name: &str, doc: Doc) -> leibniz2::Result<(&'static str, Value)> {
    match name {
        "verify" => cmd_verify(doc),
        "cohomology" => cmd_cohomology(doc),
        "extend" => cmd_extend(doc),
        "extract" => cmd_extract(doc),
        "equiv" => cmd_equiv(doc),
        "induce-aut" => cmd_induce_aut(doc),
        "induce-der" => cmd_induce_der(doc),
        "wells-aut" => cmd_wells(doc, true),
        "wells-der" => cmd_wells(doc, false),
        "xmod-verify" => cmd_xmod_verify(doc),
        "xmod-induce-aut" => cmd_xmod_induce_aut(doc),
        "xmod-induce-der" => cmd_xmod_induce_der(doc),
        "xmod-wells-aut" => cmd_xmod_wells(doc, true),
        "xmod-wells-der" => cmd_xmod_wells(doc, false),
        _ => unreachable!("unknown command {name}"),
    }
}

// The unwraps below never fire: the schema layer has already enforced the
// presence requirements for the dispatched command.

fn take_extension(block: ExtensionBlock) -> leibniz2::Result<Extension> {
    Extension::new(block.hat, block.base, block.fiber, block.i, block.p)
}

fn take_aut_pair(p: PairBlock) -> AutPair {
    AutPair {
        beta0: p.beta0,
        beta1: p.beta1,
        alpha: Hom2 { f0: p.alpha0, f1: p.alpha1, f2: p.alpha2 },
    }
}

fn take_der_pair(p: PairBlock) -> DerPair {
    DerPair {
        beta0: p.beta0,
        beta1: p.beta1,
        alpha: Derivation2 { d0: p.alpha0, d1: p.alpha1, d2: p.alpha2 },
    }
}

fn take_xmod_pair(p: PairBlock) -> XModPair {
    XModPair { beta0: p.beta0, beta1: p.beta1, alpha0: p.alpha0, alpha1: p.alpha1 }
}

fn verdict_fields(ver: &leibniz2::Verification) -> (&'static str, Value) {
    let status = if ver.is_ok() { "ok" } else { "violations" };
    (
        status,
        json!({
            "ok": ver.is_ok(),
            "violations": report::violations_value(&ver.violations),
        }),
    )
}

fn cmd_verify(doc: Doc) -> leibniz2::Result<(&'static str, Value)> {
    let g = doc.algebra.expect("schema");
    Ok(verdict_fields(&verify_algebra(&g)?))
}

fn cmd_xmod_verify(doc: Doc) -> leibniz2::Result<(&'static str, Value)> {
    let xm = doc.crossed_module.expect("schema");
    Ok(verdict_fields(&verify_xmod(&xm)?))
}

/// Cohomology needs genuine coefficients; over data that breaks the
/// representation laws the coboundary spaces are not even subspaces of the
/// cocycle spaces.
fn require_representation(
    g: &leibniz2::Leibniz2Algebra,
    rep: &Representation,
) -> leibniz2::Result<()> {
    if !verify_representation(g, rep)?.is_ok() {
        return Err(Error::Invalid(
            "representation laws fail on the given coefficients".into(),
        ));
    }
    Ok(())
}

fn cmd_cohomology(doc: Doc) -> leibniz2::Result<(&'static str, Value)> {
    let g = doc.algebra.expect("schema");
    let rep = doc.representation.expect("schema");
    require_representation(&g, &rep)?;
    let s = cohomology(&g, &rep)?;
    Ok((
        "ok",
        json!({
            "dims": {
                "C1": s.dim_c1,
                "C2": s.dim_c2,
                "Z1": s.dim_z1,
                "Z2": s.dim_z2,
                "B2": s.dim_b2,
                "H2": s.dim_h2,
            },
            "z1_basis": report::basis_value(&s.z1_basis),
            "z2_basis": report::basis_value(&s.z2_basis),
            "b2_basis": report::basis_value(&s.b2_basis),
            "h2_representatives": report::basis_value(&s.h2_representatives),
        }),
    ))
}

fn extension_value(e: &Extension) -> Value {
    json!({
        "hat": report::algebra_value(&e.hat),
        "base": report::algebra_value(&e.base),
        "fiber": report::complex_value(&e.fiber),
        "i": report::graded_value(&e.i),
        "p": report::graded_value(&e.p),
    })
}

fn cmd_extend(doc: Doc) -> leibniz2::Result<(&'static str, Value)> {
    let g = doc.algebra.expect("schema");
    let rep = doc.representation.expect("schema");
    let c = doc.cocycle.expect("schema");
    let e = build_extension(&g, &rep, &c)?;
    let s = find_splitting(&e)?;
    Ok((
        "ok",
        json!({
            "extension": extension_value(&e),
            "splitting": report::splitting_value(&s),
        }),
    ))
}

fn cmd_extract(doc: Doc) -> leibniz2::Result<(&'static str, Value)> {
    let splitting = doc.splitting;
    let e = take_extension(doc.extension.expect("schema"))?;
    let s = match splitting {
        Some(s) => s,
        None => find_splitting(&e)?,
    };
    let c = extract_cocycle(&e, &s)?;
    Ok((
        "ok",
        json!({
            "splitting": report::splitting_value(&s),
            "cocycle": report::cochain2_value(&c),
        }),
    ))
}

fn cmd_equiv(doc: Doc) -> leibniz2::Result<(&'static str, Value)> {
    let ea = take_extension(doc.extension.expect("schema"))?;
    let eb = take_extension(doc.extension_b.expect("schema"))?;
    match extensions_equivalent(&ea, &eb)? {
        Some(f) => Ok(("equivalent", json!({ "witness": report::hom_value(&f) }))),
        None => Ok(("inequivalent", json!({}))),
    }
}

fn wells_fields<M>(
    rpt: &WellsReport<M>,
    induced_value: impl Fn(&M) -> Value,
) -> (&'static str, Value) {
    if !rpt.compatible {
        return (
            "incompatible",
            json!({
                "compatible": false,
                "violations": report::violations_value(&rpt.violations),
            }),
        );
    }
    let class = rpt
        .obstruction_class
        .as_ref()
        .map(|c| report::scalar_vec_value(c))
        .unwrap_or(Value::Null);
    match (&rpt.induced, &rpt.witness) {
        (Some(ind), witness) => (
            "inducible",
            json!({
                "compatible": true,
                "obstruction_class": class,
                "witness": witness.as_ref().map(report::cochain1_value).unwrap_or(Value::Null),
                "induced": induced_value(ind),
            }),
        ),
        (None, _) => (
            "not_inducible",
            json!({
                "compatible": true,
                "obstruction_class": class,
            }),
        ),
    }
}

fn cmd_induce_aut(doc: Doc) -> leibniz2::Result<(&'static str, Value)> {
    let pair = take_aut_pair(doc.pair.expect("schema"));
    let e = take_extension(doc.extension.expect("schema"))?;
    let rpt = aut_induce(&e, &pair)?;
    Ok(wells_fields(&rpt, report::hom_value))
}

fn cmd_induce_der(doc: Doc) -> leibniz2::Result<(&'static str, Value)> {
    let pair = take_der_pair(doc.pair.expect("schema"));
    let e = take_extension(doc.extension.expect("schema"))?;
    let rpt = der_induce(&e, &pair)?;
    Ok(wells_fields(&rpt, report::der_value))
}

fn class_fields(class: Vec<Scalar>) -> (&'static str, Value) {
    let zero = class.iter().all(|x| *x == leibniz2::scalar::int(0));
    let status = if zero { "zero_class" } else { "nonzero_class" };
    (status, json!({ "class": report::scalar_vec_value(&class) }))
}

/// Shared soundness gates of the class commands: the coefficients must be a
/// genuine representation and the cochain a genuine cocycle, exactly as the
/// extension builder demands.
fn require_cocycle(
    g: &leibniz2::Leibniz2Algebra,
    rep: &Representation,
    c: &Cochain2,
) -> leibniz2::Result<()> {
    require_representation(g, rep)?;
    let rpt = is_cocycle2(g, rep, c)?;
    if !rpt.is_cocycle {
        let first = &rpt.violations[0];
        return Err(Error::NotCocycle(format!("{} fails at {:?}", first.law, first.at)));
    }
    Ok(())
}

fn cmd_wells(doc: Doc, aut: bool) -> leibniz2::Result<(&'static str, Value)> {
    let g = doc.algebra.expect("schema");
    let rep = doc.representation.expect("schema");
    let c = doc.cocycle.expect("schema");
    let pb = doc.pair.expect("schema");
    if !verify_algebra(&g)?.is_ok() {
        return Err(Error::Invalid("structure laws fail on the base algebra".into()));
    }
    require_cocycle(&g, &rep, &c)?;
    let class = if aut {
        wells_aut(&g, &rep, &c, &take_aut_pair(pb))?
    } else {
        wells_der(&g, &rep, &c, &take_der_pair(pb))?
    };
    Ok(class_fields(class))
}

struct XModInput {
    xm: CrossedModule,
    xrep: XModRep,
    c: Cochain2,
    pair: XModPair,
}

fn take_xmod_input(doc: Doc) -> leibniz2::Result<XModInput> {
    let xm = doc.crossed_module.expect("schema");
    let rep = doc.representation.expect("schema");
    let xrep = XModRep::from_representation(&rep)?;
    let c = doc.cocycle.expect("schema");
    let pair = take_xmod_pair(doc.pair.expect("schema"));
    Ok(XModInput { xm, xrep, c, pair })
}

fn cmd_xmod_induce_aut(doc: Doc) -> leibniz2::Result<(&'static str, Value)> {
    let input = take_xmod_input(doc)?;
    let rpt = xmod_aut_induce(&input.xm, &input.xrep, &input.c, &input.pair)?;
    Ok(wells_fields(&rpt, report::hom_value))
}

fn cmd_xmod_induce_der(doc: Doc) -> leibniz2::Result<(&'static str, Value)> {
    let input = take_xmod_input(doc)?;
    let rpt = xmod_der_induce(&input.xm, &input.xrep, &input.c, &input.pair)?;
    Ok(wells_fields(&rpt, report::der_value))
}

fn cmd_xmod_wells(doc: Doc, aut: bool) -> leibniz2::Result<(&'static str, Value)> {
    let input = take_xmod_input(doc)?;
    let ver = verify_xmod(&input.xm)?;
    if let Some(first) = ver.violations.first() {
        return Err(Error::Invalid(format!(
            "crossed module law {} fails at {:?}",
            first.law, first.at
        )));
    }
    let g = xmod_to_strict(&input.xm)?;
    let rep2 = input.xrep.to_representation();
    require_cocycle(&g, &rep2, &input.c)?;
    let class = if aut {
        xmod_wells_aut(&input.xm, &input.xrep, &input.c, &input.pair)?
    } else {
        xmod_wells_der(&input.xm, &input.xrep, &input.c, &input.pair)?
    };
    Ok(class_fields(class))
}
