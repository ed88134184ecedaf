//! Input document validation.
//!
//! Documents are single JSON objects with a mandatory `schema_version` and a
//! set of named blocks. Every problem is reported with a JSON path such as
//! `$.algebra.d`; validation keeps going after an error so one run surfaces
//! as many problems as possible. Unknown fields are rejected everywhere: a
//! silently ignored structure constant is the worst possible failure mode
//! for exact computations.

use leibniz2::{
    CrossedModule, GradedMap, Leibniz2Algebra, Mat, MultiMap, Representation, Scalar,
    TwoTermComplex,
};
use serde_json::{Map, Value};

/// Whether a command reads, tolerates or rejects a block.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Req {
    Required,
    Optional,
    Forbidden,
}

/// Block requirements of a single command.
#[derive(Clone, Copy)]
pub struct Requirements {
    pub algebra: Req,
    pub representation: Req,
    pub cocycle: Req,
    pub extension: Req,
    pub extension_b: Req,
    pub pair: Req,
    pub splitting: Req,
    pub crossed_module: Req,
    /// Crossed module morphisms are strict; their pairs carry no `alpha2`.
    pub pair_allows_alpha2: bool,
}

impl Requirements {
    pub fn none() -> Self {
        Requirements {
            algebra: Req::Forbidden,
            representation: Req::Forbidden,
            cocycle: Req::Forbidden,
            extension: Req::Forbidden,
            extension_b: Req::Forbidden,
            pair: Req::Forbidden,
            splitting: Req::Forbidden,
            crossed_module: Req::Forbidden,
            pair_allows_alpha2: true,
        }
    }
}

/// Raw pieces of an extension block; assembling them into an
/// [`leibniz2::Extension`] runs the mathematical checks and is left to the
/// caller so those failures report as results, not schema errors.
pub struct ExtensionBlock {
    pub hat: Leibniz2Algebra,
    pub base: Leibniz2Algebra,
    pub fiber: TwoTermComplex,
    pub i: GradedMap,
    pub p: GradedMap,
}

/// Morphism pair block; `alpha2` defaults to zero when absent.
pub struct PairBlock {
    pub beta0: Mat,
    pub beta1: Mat,
    pub alpha0: Mat,
    pub alpha1: Mat,
    pub alpha2: MultiMap,
}

/// Fully validated input document.
pub struct Doc {
    pub algebra: Option<Leibniz2Algebra>,
    pub representation: Option<Representation>,
    pub cocycle: Option<leibniz2::Cochain2>,
    pub extension: Option<ExtensionBlock>,
    pub extension_b: Option<ExtensionBlock>,
    pub pair: Option<PairBlock>,
    pub splitting: Option<leibniz2::Splitting>,
    pub crossed_module: Option<CrossedModule>,
}

struct Ctx {
    errors: Vec<String>,
}

impl Ctx {
    fn err(&mut self, path: &str, msg: impl AsRef<str>) {
        self.errors.push(format!("{path}: {}", msg.as_ref()));
    }
}

pub fn parse_document(text: &str, req: &Requirements) -> Result<Doc, Vec<String>> {
    let mut ctx = Ctx { errors: Vec::new() };
    let value: Value = match serde_json::from_str(text) {
        Ok(v) => v,
        Err(e) => return Err(vec![format!("$: invalid JSON: {e}")]),
    };
    let doc = parse_top(&value, req, &mut ctx);
    if ctx.errors.is_empty() {
        Ok(doc)
    } else {
        Err(ctx.errors)
    }
}

const TOP_KEYS: [&str; 9] = [
    "schema_version",
    "algebra",
    "representation",
    "cocycle",
    "extension",
    "options",
    "pair",
    "splitting",
    "crossed_module",
];

fn parse_top(value: &Value, req: &Requirements, ctx: &mut Ctx) -> Doc {
    let mut doc = Doc {
        algebra: None,
        representation: None,
        cocycle: None,
        extension: None,
        extension_b: None,
        pair: None,
        splitting: None,
        crossed_module: None,
    };
    let Some(obj) = as_object(value, "$", ctx) else {
        return doc;
    };
    reject_unknown(obj, &TOP_KEYS, "$", ctx);
    match obj.get("schema_version") {
        Some(Value::String(s)) if s == "1" => {}
        Some(Value::String(s)) => ctx.err("$.schema_version", format!("unsupported version {s:?}, expected \"1\"")),
        Some(_) => ctx.err("$.schema_version", "expected a string"),
        None => ctx.err("$", "missing required field schema_version"),
    }

    check_presence(obj, "algebra", req.algebra, ctx);
    check_presence(obj, "representation", req.representation, ctx);
    check_presence(obj, "cocycle", req.cocycle, ctx);
    check_presence(obj, "extension", req.extension, ctx);
    check_presence(obj, "pair", req.pair, ctx);
    check_presence(obj, "splitting", req.splitting, ctx);
    check_presence(obj, "crossed_module", req.crossed_module, ctx);
    match (obj.get("options").is_some(), req.extension_b) {
        (false, Req::Required) => ctx.err("$", "missing required block options"),
        (true, Req::Forbidden) => ctx.err("$.options", "block not used by this command"),
        _ => {}
    }

    if let Some(v) = obj.get("algebra") {
        if req.algebra != Req::Forbidden {
            doc.algebra = parse_algebra(v, "$.algebra", ctx);
        }
    }
    if let Some(v) = obj.get("crossed_module") {
        if req.crossed_module != Req::Forbidden {
            doc.crossed_module = parse_crossed_module(v, "$.crossed_module", ctx);
        }
    }

    // context dimensions for the coefficient blocks
    let gdims = doc
        .algebra
        .as_ref()
        .map(|g| (g.dim0, g.dim1))
        .or_else(|| doc.crossed_module.as_ref().map(|x| (x.p0_dim(), x.p1_dim)));

    if let Some(v) = obj.get("representation") {
        if req.representation != Req::Forbidden {
            if let Some((g0, g1)) = gdims {
                doc.representation = parse_representation(v, g0, g1, "$.representation", ctx);
            } else {
                ctx.err("$.representation", "needs a valid algebra or crossed_module block for its dimensions");
            }
        }
    }
    if let Some(v) = obj.get("cocycle") {
        if req.cocycle != Req::Forbidden {
            match (gdims, doc.representation.as_ref()) {
                (Some((g0, g1)), Some(rep)) => {
                    doc.cocycle =
                        parse_cocycle(v, g0, g1, rep.v.dim0, rep.v.dim1, "$.cocycle", ctx);
                }
                _ => ctx.err(
                    "$.cocycle",
                    "needs valid algebra (or crossed_module) and representation blocks for its dimensions",
                ),
            }
        }
    }
    if let Some(v) = obj.get("extension") {
        if req.extension != Req::Forbidden {
            doc.extension = parse_extension(v, "$.extension", ctx);
        }
    }
    if let Some(v) = obj.get("options") {
        if req.extension_b != Req::Forbidden {
            if let Some(opts) = as_object(v, "$.options", ctx) {
                reject_unknown(opts, &["extension_b"], "$.options", ctx);
                match opts.get("extension_b") {
                    Some(b) => {
                        doc.extension_b = parse_extension(b, "$.options.extension_b", ctx);
                    }
                    None => ctx.err("$.options", "missing required field extension_b"),
                }
            }
        }
    }

    // morphism pairs: shapes come from the extension when present, from the
    // algebra and representation otherwise
    if let Some(v) = obj.get("pair") {
        if req.pair != Req::Forbidden {
            let dims = if let Some(e) = doc.extension.as_ref() {
                Some((e.base.dim0, e.base.dim1, e.fiber.dim0, e.fiber.dim1))
            } else {
                match (gdims, doc.representation.as_ref()) {
                    (Some((g0, g1)), Some(rep)) => Some((g0, g1, rep.v.dim0, rep.v.dim1)),
                    _ => None,
                }
            };
            if let Some((g0, g1, v0, v1)) = dims {
                doc.pair =
                    parse_pair(v, g0, g1, v0, v1, req.pair_allows_alpha2, "$.pair", ctx);
            } else {
                ctx.err("$.pair", "needs surrounding blocks for its dimensions");
            }
        }
    }
    if let Some(v) = obj.get("splitting") {
        if req.splitting != Req::Forbidden {
            if let Some(e) = doc.extension.as_ref() {
                doc.splitting = parse_splitting(v, e, "$.splitting", ctx);
            } else {
                ctx.err("$.splitting", "needs a valid extension block for its dimensions");
            }
        }
    }
    doc
}

fn check_presence(obj: &Map<String, Value>, key: &str, req: Req, ctx: &mut Ctx) {
    match (obj.get(key).is_some(), req) {
        (false, Req::Required) => ctx.err("$", format!("missing required block {key}")),
        (true, Req::Forbidden) => ctx.err(&format!("$.{key}"), "block not used by this command"),
        _ => {}
    }
}

fn as_object<'a>(v: &'a Value, path: &str, ctx: &mut Ctx) -> Option<&'a Map<String, Value>> {
    match v {
        Value::Object(m) => Some(m),
        _ => {
            ctx.err(path, "expected an object");
            None
        }
    }
}

fn reject_unknown(obj: &Map<String, Value>, allowed: &[&str], path: &str, ctx: &mut Ctx) {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            ctx.err(&format!("{path}.{key}"), "unknown field");
        }
    }
}

fn get<'a>(
    obj: &'a Map<String, Value>,
    key: &str,
    path: &str,
    ctx: &mut Ctx,
) -> Option<&'a Value> {
    let v = obj.get(key);
    if v.is_none() {
        ctx.err(path, format!("missing required field {key}"));
    }
    v
}

fn parse_dim(v: &Value, path: &str, ctx: &mut Ctx) -> Option<usize> {
    match v.as_u64() {
        Some(n) => Some(n as usize),
        None => {
            ctx.err(path, "expected a non-negative integer");
            None
        }
    }
}

fn parse_scalar_value(v: &Value, path: &str, ctx: &mut Ctx) -> Option<Scalar> {
    match v {
        Value::String(s) => match leibniz2::parse_scalar(s) {
            Ok(x) => Some(x),
            Err(_) => {
                ctx.err(path, format!("invalid scalar {s:?}, expected \"p\" or \"p/q\""));
                None
            }
        },
        _ => {
            ctx.err(path, "expected a scalar string such as \"2\" or \"-1/3\"");
            None
        }
    }
}

fn parse_mat(v: &Value, rows: usize, cols: usize, path: &str, ctx: &mut Ctx) -> Option<Mat> {
    let Value::Array(row_vals) = v else {
        ctx.err(path, format!("expected a {rows}x{cols} matrix (array of rows)"));
        return None;
    };
    if row_vals.len() != rows {
        ctx.err(path, format!("expected {rows} rows, found {}", row_vals.len()));
        return None;
    }
    let mut data = Vec::with_capacity(rows * cols);
    for (r, rv) in row_vals.iter().enumerate() {
        let rpath = format!("{path}[{r}]");
        let Value::Array(entries) = rv else {
            ctx.err(&rpath, "expected an array of scalar strings");
            return None;
        };
        if entries.len() != cols {
            ctx.err(&rpath, format!("expected {cols} entries, found {}", entries.len()));
            return None;
        }
        for (c, ev) in entries.iter().enumerate() {
            match parse_scalar_value(ev, &format!("{rpath}[{c}]"), ctx) {
                Some(x) => data.push(x),
                None => return None,
            }
        }
    }
    match Mat::new(rows, cols, data) {
        Ok(m) => Some(m),
        Err(e) => {
            ctx.err(path, format!("{e}"));
            None
        }
    }
}

fn parse_tensor(
    v: &Value,
    input_dims: &[usize],
    out_dim: usize,
    path: &str,
    ctx: &mut Ctx,
) -> Option<MultiMap> {
    let mut mm = MultiMap::zeros(input_dims.to_vec(), out_dim);
    let mut idx = Vec::with_capacity(input_dims.len());
    if fill_tensor(&mut mm, v, input_dims, out_dim, &mut idx, path, ctx) {
        Some(mm)
    } else {
        None
    }
}

fn fill_tensor(
    mm: &mut MultiMap,
    v: &Value,
    input_dims: &[usize],
    out_dim: usize,
    idx: &mut Vec<usize>,
    path: &str,
    ctx: &mut Ctx,
) -> bool {
    let depth = idx.len();
    let Value::Array(items) = v else {
        ctx.err(path, "expected an array");
        return false;
    };
    if depth == input_dims.len() {
        if items.len() != out_dim {
            ctx.err(path, format!("expected {out_dim} output coordinates, found {}", items.len()));
            return false;
        }
        for (o, ev) in items.iter().enumerate() {
            match parse_scalar_value(ev, &format!("{path}[{o}]"), ctx) {
                Some(x) => mm.set(o, idx, x),
                None => return false,
            }
        }
        return true;
    }
    if items.len() != input_dims[depth] {
        ctx.err(path, format!("expected {} entries, found {}", input_dims[depth], items.len()));
        return false;
    }
    for (k, item) in items.iter().enumerate() {
        idx.push(k);
        let ok = fill_tensor(mm, item, input_dims, out_dim, idx, &format!("{path}[{k}]"), ctx);
        idx.pop();
        if !ok {
            return false;
        }
    }
    true
}

fn parse_algebra(v: &Value, path: &str, ctx: &mut Ctx) -> Option<Leibniz2Algebra> {
    let obj = as_object(v, path, ctx)?;
    reject_unknown(obj, &["dim0", "dim1", "d", "b00", "b01", "b10", "l3"], path, ctx);
    let dim0 = parse_dim(get(obj, "dim0", path, ctx)?, &format!("{path}.dim0"), ctx)?;
    let dim1 = parse_dim(get(obj, "dim1", path, ctx)?, &format!("{path}.dim1"), ctx)?;
    let d = parse_mat(get(obj, "d", path, ctx)?, dim0, dim1, &format!("{path}.d"), ctx);
    let b00 = parse_tensor(get(obj, "b00", path, ctx)?, &[dim0, dim0], dim0, &format!("{path}.b00"), ctx);
    let b01 = parse_tensor(get(obj, "b01", path, ctx)?, &[dim0, dim1], dim1, &format!("{path}.b01"), ctx);
    let b10 = parse_tensor(get(obj, "b10", path, ctx)?, &[dim1, dim0], dim1, &format!("{path}.b10"), ctx);
    let l3 = parse_tensor(get(obj, "l3", path, ctx)?, &[dim0, dim0, dim0], dim1, &format!("{path}.l3"), ctx);
    match Leibniz2Algebra::new(dim0, dim1, d?, b00?, b01?, b10?, l3?) {
        Ok(g) => Some(g),
        Err(e) => {
            ctx.err(path, format!("{e}"));
            None
        }
    }
}

fn parse_complex(v: &Value, path: &str, ctx: &mut Ctx) -> Option<TwoTermComplex> {
    let obj = as_object(v, path, ctx)?;
    reject_unknown(obj, &["dim0", "dim1", "partial"], path, ctx);
    let dim0 = parse_dim(get(obj, "dim0", path, ctx)?, &format!("{path}.dim0"), ctx)?;
    let dim1 = parse_dim(get(obj, "dim1", path, ctx)?, &format!("{path}.dim1"), ctx)?;
    let partial = parse_mat(get(obj, "partial", path, ctx)?, dim0, dim1, &format!("{path}.partial"), ctx)?;
    match TwoTermComplex::new(dim1, dim0, partial) {
        Ok(c) => Some(c),
        Err(e) => {
            ctx.err(path, format!("{e}"));
            None
        }
    }
}

fn parse_representation(
    v: &Value,
    g0: usize,
    g1: usize,
    path: &str,
    ctx: &mut Ctx,
) -> Option<Representation> {
    let obj = as_object(v, path, ctx)?;
    reject_unknown(
        obj,
        &["V", "l0_0", "l0_1", "r0_0", "r0_1", "l1", "r1", "l2", "m2", "r2"],
        path,
        ctx,
    );
    let vx = parse_complex(get(obj, "V", path, ctx)?, &format!("{path}.V"), ctx)?;
    let (v0, v1) = (vx.dim0, vx.dim1);
    let shapes: [(&str, Vec<usize>, usize); 9] = [
        ("l0_0", vec![g0, v0], v0),
        ("l0_1", vec![g0, v1], v1),
        ("r0_0", vec![g0, v0], v0),
        ("r0_1", vec![g0, v1], v1),
        ("l1", vec![g1, v0], v1),
        ("r1", vec![g1, v0], v1),
        ("l2", vec![g0, g0, v0], v1),
        ("m2", vec![g0, g0, v0], v1),
        ("r2", vec![g0, g0, v0], v1),
    ];
    let mut parts = Vec::with_capacity(9);
    for (name, dims, out) in shapes {
        let part = get(obj, name, path, ctx)
            .and_then(|pv| parse_tensor(pv, &dims, out, &format!("{path}.{name}"), ctx));
        parts.push(part);
    }
    let mut it = parts.into_iter();
    Some(Representation {
        v: vx,
        l0_0: it.next()??,
        l0_1: it.next()??,
        r0_0: it.next()??,
        r0_1: it.next()??,
        l1: it.next()??,
        r1: it.next()??,
        l2: it.next()??,
        m2: it.next()??,
        r2: it.next()??,
    })
}

fn parse_cocycle(
    v: &Value,
    g0: usize,
    g1: usize,
    v0: usize,
    v1: usize,
    path: &str,
    ctx: &mut Ctx,
) -> Option<leibniz2::Cochain2> {
    let obj = as_object(v, path, ctx)?;
    reject_unknown(obj, &["psi", "omega", "mu", "nu", "theta"], path, ctx);
    let psi = get(obj, "psi", path, ctx)
        .and_then(|pv| parse_mat(pv, v0, g1, &format!("{path}.psi"), ctx));
    let omega = get(obj, "omega", path, ctx)
        .and_then(|pv| parse_tensor(pv, &[g0, g0], v0, &format!("{path}.omega"), ctx));
    let mu = get(obj, "mu", path, ctx)
        .and_then(|pv| parse_tensor(pv, &[g0, g1], v1, &format!("{path}.mu"), ctx));
    let nu = get(obj, "nu", path, ctx)
        .and_then(|pv| parse_tensor(pv, &[g1, g0], v1, &format!("{path}.nu"), ctx));
    let theta = get(obj, "theta", path, ctx)
        .and_then(|pv| parse_tensor(pv, &[g0, g0, g0], v1, &format!("{path}.theta"), ctx));
    Some(leibniz2::Cochain2 {
        psi: psi?,
        omega: omega?,
        mu: mu?,
        nu: nu?,
        theta: theta?,
    })
}

fn parse_graded_map(
    v: &Value,
    rows0: usize,
    cols0: usize,
    rows1: usize,
    cols1: usize,
    path: &str,
    ctx: &mut Ctx,
) -> Option<GradedMap> {
    let obj = as_object(v, path, ctx)?;
    reject_unknown(obj, &["m0", "m1"], path, ctx);
    let m0 = get(obj, "m0", path, ctx)
        .and_then(|pv| parse_mat(pv, rows0, cols0, &format!("{path}.m0"), ctx));
    let m1 = get(obj, "m1", path, ctx)
        .and_then(|pv| parse_mat(pv, rows1, cols1, &format!("{path}.m1"), ctx));
    Some(GradedMap { m0: m0?, m1: m1? })
}

fn parse_extension(v: &Value, path: &str, ctx: &mut Ctx) -> Option<ExtensionBlock> {
    let obj = as_object(v, path, ctx)?;
    reject_unknown(obj, &["hat", "base", "fiber", "i", "p"], path, ctx);
    let hat = get(obj, "hat", path, ctx)
        .and_then(|pv| parse_algebra(pv, &format!("{path}.hat"), ctx));
    let base = get(obj, "base", path, ctx)
        .and_then(|pv| parse_algebra(pv, &format!("{path}.base"), ctx));
    let fiber = get(obj, "fiber", path, ctx)
        .and_then(|pv| parse_complex(pv, &format!("{path}.fiber"), ctx));
    let (hat, base, fiber) = (hat?, base?, fiber?);
    let i = get(obj, "i", path, ctx).and_then(|pv| {
        parse_graded_map(pv, hat.dim0, fiber.dim0, hat.dim1, fiber.dim1, &format!("{path}.i"), ctx)
    });
    let p = get(obj, "p", path, ctx).and_then(|pv| {
        parse_graded_map(pv, base.dim0, hat.dim0, base.dim1, hat.dim1, &format!("{path}.p"), ctx)
    });
    Some(ExtensionBlock { hat, base, fiber, i: i?, p: p? })
}

fn parse_pair(
    v: &Value,
    g0: usize,
    g1: usize,
    v0: usize,
    v1: usize,
    allow_alpha2: bool,
    path: &str,
    ctx: &mut Ctx,
) -> Option<PairBlock> {
    let obj = as_object(v, path, ctx)?;
    reject_unknown(obj, &["beta0", "beta1", "alpha0", "alpha1", "alpha2"], path, ctx);
    let beta0 = get(obj, "beta0", path, ctx)
        .and_then(|pv| parse_mat(pv, v0, v0, &format!("{path}.beta0"), ctx));
    let beta1 = get(obj, "beta1", path, ctx)
        .and_then(|pv| parse_mat(pv, v1, v1, &format!("{path}.beta1"), ctx));
    let alpha0 = get(obj, "alpha0", path, ctx)
        .and_then(|pv| parse_mat(pv, g0, g0, &format!("{path}.alpha0"), ctx));
    let alpha1 = get(obj, "alpha1", path, ctx)
        .and_then(|pv| parse_mat(pv, g1, g1, &format!("{path}.alpha1"), ctx));
    let alpha2 = match obj.get("alpha2") {
        Some(pv) => {
            let t = parse_tensor(pv, &[g0, g0], g1, &format!("{path}.alpha2"), ctx)?;
            if !allow_alpha2 && !t.is_zero() {
                ctx.err(
                    &format!("{path}.alpha2"),
                    "crossed module pairs are strict; alpha2 must vanish",
                );
                return None;
            }
            t
        }
        None => MultiMap::zeros(vec![g0, g0], g1),
    };
    Some(PairBlock {
        beta0: beta0?,
        beta1: beta1?,
        alpha0: alpha0?,
        alpha1: alpha1?,
        alpha2,
    })
}

fn parse_splitting(
    v: &Value,
    e: &ExtensionBlock,
    path: &str,
    ctx: &mut Ctx,
) -> Option<leibniz2::Splitting> {
    let obj = as_object(v, path, ctx)?;
    reject_unknown(obj, &["s0", "s1"], path, ctx);
    let s0 = get(obj, "s0", path, ctx)
        .and_then(|pv| parse_mat(pv, e.hat.dim0, e.base.dim0, &format!("{path}.s0"), ctx));
    let s1 = get(obj, "s1", path, ctx)
        .and_then(|pv| parse_mat(pv, e.hat.dim1, e.base.dim1, &format!("{path}.s1"), ctx));
    Some(leibniz2::Splitting { s0: s0?, s1: s1? })
}

fn parse_crossed_module(v: &Value, path: &str, ctx: &mut Ctx) -> Option<CrossedModule> {
    let obj = as_object(v, path, ctx)?;
    reject_unknown(
        obj,
        &["p0_bracket", "p1_dim", "left_action", "right_action", "f"],
        path,
        ctx,
    );
    let p1 = parse_dim(get(obj, "p1_dim", path, ctx)?, &format!("{path}.p1_dim"), ctx)?;
    // the top dimension is implicit in the structure map
    let p0 = match get(obj, "f", path, ctx)? {
        Value::Array(rows) => rows.len(),
        _ => {
            ctx.err(&format!("{path}.f"), "expected a matrix (array of rows)");
            return None;
        }
    };
    let bracket = get(obj, "p0_bracket", path, ctx)
        .and_then(|pv| parse_tensor(pv, &[p0, p0], p0, &format!("{path}.p0_bracket"), ctx));
    let left = get(obj, "left_action", path, ctx)
        .and_then(|pv| parse_tensor(pv, &[p0, p1], p1, &format!("{path}.left_action"), ctx));
    let right = get(obj, "right_action", path, ctx)
        .and_then(|pv| parse_tensor(pv, &[p1, p0], p1, &format!("{path}.right_action"), ctx));
    let f = get(obj, "f", path, ctx)
        .and_then(|pv| parse_mat(pv, p0, p1, &format!("{path}.f"), ctx));
    let xm = CrossedModule {
        p0_bracket: bracket?,
        p1_dim: p1,
        left: left?,
        right: right?,
        f: f?,
    };
    match xm.validate() {
        Ok(()) => Some(xm),
        Err(e) => {
            ctx.err(path, format!("{e}"));
            None
        }
    }
}
