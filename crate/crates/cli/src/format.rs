//! The JSON file format.
//!
//! Every file is one object with a `kind` and the fields
//! `size, add, mul?, one?, left_action?, right_action?, base?, maps?`.
//! Tables are lists of rows: `add[a][b] = a + b`, `mul[a][b] = ab`,
//! `left_action[s][m] = s·m` and `right_action[s][m] = m·s`. `base` is a
//! builtin name such as `"zmod(2)"` or a nested `semiring` object.
//!
//! | kind | extra fields |
//! |------|--------------|
//! | `semiring` | `mul`, `one` |
//! | `semimodule` | `base`, actions |
//! | `semiunital-semiring` | as `semimodule`, `maps.mu[a][b]`, `maps.eta[s]` |
//! | `semicounital-semicoring` | as `semimodule`, `maps.delta[c] = [[c1, c2], …]`, `maps.epsilon[c]` |
//! | `semiring-map` | the target as `semiring`, `base` the source, `maps.kappa[s]` |

use std::sync::Arc;

use serde_json::{json, Map, Value as Json};

use semiunital::algebra::fixtures::builtin_semiring;
use semiunital::algebra::{validate_semimodule, validate_semiring, LinearMap, Semimodule, Semiring};
use semiunital::semistructures::{check_semiring_map, SemicounitalSemicoring, SemiunitalSemiring};
use semiunital::tensor::TensorProduct;
use semiunital::variety::Variety;
use semiunital::LawReport;

/// A parsed input file.
#[derive(Clone, Debug)]
pub enum Item {
    Semiring(Arc<Semiring>),
    Semimodule(Arc<Semimodule>),
    SemiunitalSemiring(SemiunitalSemiring),
    SemicounitalSemicoring(SemicounitalSemicoring),
    SemiringMap {
        source: Arc<Semiring>,
        target: Arc<Semiring>,
        kappa: Vec<usize>,
    },
}

impl Item {
    pub fn kind(&self) -> &'static str {
        match self {
            Item::Semiring(_) => "semiring",
            Item::Semimodule(_) => "semimodule",
            Item::SemiunitalSemiring(_) => "semiunital-semiring",
            Item::SemicounitalSemicoring(_) => "semicounital-semicoring",
            Item::SemiringMap { .. } => "semiring-map",
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("semantic error: {0}")]
    Semantic(LawReport),
    #[error("{0}")]
    Core(#[from] semiunital::Error),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

impl InputError {
    pub fn id(&self) -> &'static str {
        match self {
            InputError::Syntax { .. } => "syntax-error",
            InputError::Semantic(_) => "semantic-error",
            InputError::Core(e) => e.id(),
            InputError::Io { .. } => "io-error",
        }
    }
}

type Parsed<T> = std::result::Result<T, InputError>;

/// One variety per base semiring, shared by all files of a run so that
/// structures over the same base can be combined.
#[derive(Default)]
pub struct Context {
    varieties: Vec<Arc<Variety>>,
}

impl Context {
    pub fn variety(&mut self, base: &Arc<Semiring>) -> Arc<Variety> {
        if let Some(v) = self.varieties.iter().find(|v| **v.base() == **base) {
            return v.clone();
        }
        let v = Arc::new(Variety::new(base.clone()));
        self.varieties.push(v.clone());
        v
    }
}

struct Source<'a> {
    text: &'a str,
}

impl Source<'_> {
    /// Line and column of the first occurrence of `"key"`, or of the start.
    fn position(&self, key: &str) -> (usize, usize) {
        let needle = format!("\"{key}\"");
        let offset = self.text.find(&needle).unwrap_or(0);
        let before = &self.text[..offset];
        let line = before.matches('\n').count() + 1;
        let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
        (line, column)
    }

    fn error(&self, key: &str, message: impl Into<String>) -> InputError {
        let (line, column) = self.position(key);
        InputError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn field<'j>(&self, obj: &'j Map<String, Json>, key: &str) -> Parsed<&'j Json> {
        obj.get(key).ok_or_else(|| self.error(key, format!("missing field `{key}`")))
    }

    fn index(&self, v: &Json, key: &str, bound: usize) -> Parsed<usize> {
        match v.as_u64() {
            Some(x) if (x as usize) < bound => Ok(x as usize),
            Some(x) => Err(self.error(key, format!("`{key}` contains {x}, out of range 0..{bound}"))),
            None => Err(self.error(key, format!("`{key}` must contain non-negative integers"))),
        }
    }

    fn size(&self, obj: &Map<String, Json>) -> Parsed<usize> {
        self.field(obj, "size")?
            .as_u64()
            .map(|x| x as usize)
            .ok_or_else(|| self.error("size", "`size` must be a non-negative integer"))
    }

    fn list(&self, v: &Json, key: &str, len: usize, bound: usize) -> Parsed<Vec<usize>> {
        let items = v.as_array().ok_or_else(|| self.error(key, format!("`{key}` must be a list")))?;
        if items.len() != len {
            return Err(self.error(key, format!("`{key}` has {} entries, expected {len}", items.len())));
        }
        items.iter().map(|x| self.index(x, key, bound)).collect()
    }

    /// A `rows × cols` table, flattened row-major.
    fn rows(&self, v: &Json, key: &str, rows: usize, cols: usize, bound: usize) -> Parsed<Vec<usize>> {
        let items = v.as_array().ok_or_else(|| self.error(key, format!("`{key}` must be a list of rows")))?;
        if items.len() != rows {
            return Err(self.error(key, format!("`{key}` has {} rows, expected {rows}", items.len())));
        }
        let mut out = Vec::with_capacity(rows * cols);
        for (r, row) in items.iter().enumerate() {
            let row = row
                .as_array()
                .ok_or_else(|| self.error(key, format!("row {r} of `{key}` is not a list")))?;
            if row.len() != cols {
                return Err(self.error(
                    key,
                    format!("ragged table: row {r} of `{key}` has {} entries, expected {cols}", row.len()),
                ));
            }
            for x in row {
                out.push(self.index(x, key, bound)?);
            }
        }
        Ok(out)
    }

    fn kind<'j>(&self, obj: &'j Map<String, Json>) -> Parsed<&'j str> {
        self.field(obj, "kind")?
            .as_str()
            .ok_or_else(|| self.error("kind", "`kind` must be a string"))
    }

    fn semiring(&self, obj: &Map<String, Json>) -> Parsed<Arc<Semiring>> {
        let n = self.size(obj)?;
        let add = self.rows(self.field(obj, "add")?, "add", n, n, n)?;
        let mul = self.rows(self.field(obj, "mul")?, "mul", n, n, n)?;
        if let Some(one) = obj.get("one") {
            if one.as_u64() != Some(1) {
                return Err(self.error("one", "the identity must be index 1"));
            }
        }
        let s = Semiring::new(n, add, mul).map_err(|e| self.error("size", e.to_string()))?;
        let r = validate_semiring(&s);
        if !r.passed {
            return Err(InputError::Semantic(r));
        }
        Ok(Arc::new(s))
    }

    fn base(&self, obj: &Map<String, Json>) -> Parsed<Option<Arc<Semiring>>> {
        match obj.get("base") {
            None => Ok(None),
            Some(Json::String(name)) => Ok(Some(builtin_semiring(name)?)),
            Some(Json::Object(inner)) => match self.kind(inner)? {
                "semiring" => Ok(Some(self.semiring(inner)?)),
                k => Err(self.error("base", format!("`base` must be a semiring, not `{k}`"))),
            },
            Some(_) => Err(self.error("base", "`base` must be a builtin name or a semiring object")),
        }
    }

    fn semimodule(&self, obj: &Map<String, Json>) -> Parsed<Arc<Semimodule>> {
        let n = self.size(obj)?;
        let add = self.rows(self.field(obj, "add")?, "add", n, n, n)?;
        let base = self.base(obj)?;
        let action = |key: &str| -> Parsed<Option<(Arc<Semiring>, Vec<usize>)>> {
            match obj.get(key) {
                None => Ok(None),
                Some(v) => {
                    let b = base
                        .clone()
                        .ok_or_else(|| self.error(key, format!("`{key}` needs a `base`")))?;
                    let t = self.rows(v, key, b.size(), n, n)?;
                    Ok(Some((b, t)))
                }
            }
        };
        let (left, right) = (action("left_action")?, action("right_action")?);
        let m = Semimodule::from_tables(n, add, left, right).map_err(|e| self.error("add", e.to_string()))?;
        let r = validate_semimodule(&m);
        if !r.passed {
            return Err(InputError::Semantic(r));
        }
        Ok(Arc::new(m))
    }

    fn maps<'j>(&self, obj: &'j Map<String, Json>) -> Parsed<&'j Map<String, Json>> {
        self.field(obj, "maps")?
            .as_object()
            .ok_or_else(|| self.error("maps", "`maps` must be an object"))
    }
}

fn linear(map: LinearMap, law: &str) -> Parsed<LinearMap> {
    let r = map.check();
    if r.passed {
        Ok(map)
    } else {
        Err(InputError::Semantic(r.scoped(law)))
    }
}

fn bimodule_base(src: &Source<'_>, m: &Semimodule) -> Parsed<Arc<Semiring>> {
    match (m.left_base(), m.right_base()) {
        (Some(a), Some(b)) if a == b => Ok(a.clone()),
        _ => Err(src.error("base", "the carrier needs left and right actions over `base`")),
    }
}

fn core_semantic(law: &str, e: semiunital::Error) -> InputError {
    match e {
        semiunital::Error::NotBalanced(d) | semiunital::Error::IllDefined(d) | semiunital::Error::NotLiftable(d) => {
            InputError::Semantic(LawReport::fail(law, vec![], d))
        }
        e => InputError::Core(e),
    }
}

/// Parses one file. Table shapes and index ranges are syntax; axioms of the
/// parsed tables are semantics.
pub fn parse_structure(text: &str, ctx: &mut Context) -> Parsed<Item> {
    let json: Json = serde_json::from_str(text).map_err(|e| InputError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let src = Source { text };
    let obj = json.as_object().ok_or_else(|| src.error("", "the file must hold one JSON object"))?;
    match src.kind(obj)? {
        "semiring" => Ok(Item::Semiring(src.semiring(obj)?)),
        "semimodule" => Ok(Item::Semimodule(src.semimodule(obj)?)),
        "semiunital-semiring" => {
            let carrier = src.semimodule(obj)?;
            let v = ctx.variety(&bimodule_base(&src, &carrier)?);
            let maps = src.maps(obj)?;
            let n = carrier.size();
            let mu = src.rows(src.field(maps, "mu")?, "mu", n, n, n)?;
            let eta = src.list(src.field(maps, "eta")?, "eta", v.base().size(), n)?;
            let s = SemiunitalSemiring::from_pairs(v, carrier, |a, b| mu[a * n + b], eta)
                .map_err(|e| core_semantic("mu-balanced", e))?;
            linear(s.eta.clone(), "eta")?;
            Ok(Item::SemiunitalSemiring(s))
        }
        "semicounital-semicoring" => {
            let carrier = src.semimodule(obj)?;
            let v = ctx.variety(&bimodule_base(&src, &carrier)?);
            let maps = src.maps(obj)?;
            let n = carrier.size();
            let t = v.tensor(&carrier, &carrier)?;
            let rows = src.field(maps, "delta")?.as_array().filter(|r| r.len() == n).ok_or_else(|| {
                src.error("delta", format!("`delta` must list one sum of pairs for each of the {n} elements"))
            })?;
            let mut delta = Vec::with_capacity(n);
            for row in rows {
                let terms = row.as_array().ok_or_else(|| src.error("delta", "each `delta` entry is a list of pairs"))?;
                let mut value = 0;
                for term in terms {
                    let pair = src.list(term, "delta", 2, n)?;
                    value = t.carrier.add(value, t.tau(pair[0], pair[1]));
                }
                delta.push(value);
            }
            let epsilon = src.list(src.field(maps, "epsilon")?, "epsilon", n, v.base().size())?;
            let delta = linear(LinearMap::new(carrier.clone(), t.carrier.clone(), delta)?, "delta")?;
            let epsilon = linear(LinearMap::new(carrier.clone(), v.unit().clone(), epsilon)?, "epsilon")?;
            Ok(Item::SemicounitalSemicoring(SemicounitalSemicoring::new(v, carrier, delta, epsilon)?))
        }
        "semiring-map" => {
            let target = src.semiring(obj)?;
            let source = src.base(obj)?.ok_or_else(|| src.error("base", "a semiring map needs its source as `base`"))?;
            let maps = src.maps(obj)?;
            let kappa = src.list(src.field(maps, "kappa")?, "kappa", source.size(), target.size())?;
            check_semiring_map(&source, &target, &kappa).map_err(|e| {
                InputError::Semantic(LawReport::fail("semiring-map", vec![], e.to_string()))
            })?;
            Ok(Item::SemiringMap { source, target, kappa })
        }
        k => Err(src.error("kind", format!("unknown kind `{k}`"))),
    }
}

pub fn parse_file(path: &std::path::Path, ctx: &mut Context) -> Parsed<Item> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_structure(&text, ctx)
}

fn rows(n: usize, m: usize, f: impl Fn(usize, usize) -> usize) -> Json {
    Json::Array((0..n).map(|a| Json::Array((0..m).map(|b| json!(f(a, b))).collect())).collect())
}

pub fn dump_semiring(s: &Semiring) -> Json {
    let n = s.size();
    json!({
        "kind": "semiring",
        "size": n,
        "add": rows(n, n, |a, b| s.add(a, b)),
        "mul": rows(n, n, |a, b| s.mul(a, b)),
        "one": 1,
    })
}

fn module_fields(m: &Semimodule) -> Map<String, Json> {
    let n = m.size();
    let mut out = Map::new();
    out.insert("size".into(), json!(n));
    out.insert("add".into(), rows(n, n, |a, b| m.add(a, b)));
    if let Some(base) = m.left_base().or(m.right_base()) {
        out.insert("base".into(), dump_semiring(base));
    }
    if let Some(a) = m.left() {
        out.insert("left_action".into(), rows(a.base().size(), n, |s, x| a.act(s, x)));
    }
    if let Some(a) = m.right() {
        out.insert("right_action".into(), rows(a.base().size(), n, |s, x| a.act(s, x)));
    }
    out
}

fn with_kind(kind: &str, fields: Map<String, Json>) -> Json {
    let mut out = Map::new();
    out.insert("kind".into(), json!(kind));
    out.extend(fields);
    Json::Object(out)
}

pub fn dump_semimodule(m: &Semimodule) -> Json {
    with_kind("semimodule", module_fields(m))
}

/// For every element of `t`, a shortest list of pairs whose `τ`-images sum
/// to it.
pub fn decompose(t: &TensorProduct) -> Vec<Vec<[usize; 2]>> {
    let size = t.size();
    let mut gens: Vec<(usize, [usize; 2])> = Vec::new();
    for a in 0..t.left.size() {
        for b in 0..t.right.size() {
            let v = t.tau(a, b);
            if v != 0 && !gens.iter().any(|&(w, _)| w == v) {
                gens.push((v, [a, b]));
            }
        }
    }
    let mut parent: Vec<Option<(usize, [usize; 2])>> = vec![None; size];
    let mut seen = vec![false; size];
    seen[0] = true;
    let mut queue = std::collections::VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for &(g, pair) in &gens {
            let y = t.carrier.add(x, g);
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some((x, pair));
                queue.push_back(y);
            }
        }
    }
    (0..size)
        .map(|mut x| {
            let mut terms = Vec::new();
            while let Some((prev, pair)) = parent[x] {
                terms.push(pair);
                x = prev;
            }
            terms.reverse();
            terms
        })
        .collect()
}

pub fn dump_semiunital_semiring(s: &SemiunitalSemiring) -> Json {
    let t = s.variety.tensor(&s.carrier, &s.carrier).expect("cached tensor");
    let n = s.carrier.size();
    let mut fields = module_fields(&s.carrier);
    fields.insert(
        "maps".into(),
        json!({
            "mu": rows(n, n, |a, b| s.mu.apply(t.tau(a, b))),
            "eta": s.eta.table.to_vec(),
        }),
    );
    with_kind("semiunital-semiring", fields)
}

pub fn dump_semicounital_semicoring(c: &SemicounitalSemicoring) -> Json {
    let t = c.variety.tensor(&c.carrier, &c.carrier).expect("cached tensor");
    let sums = decompose(&t);
    let delta: Vec<Json> = c.delta.table.iter().map(|&y| json!(sums[y])).collect();
    let mut fields = module_fields(&c.carrier);
    fields.insert(
        "maps".into(),
        json!({
            "delta": delta,
            "epsilon": c.epsilon.table.to_vec(),
        }),
    );
    with_kind("semicounital-semicoring", fields)
}

pub fn dump(item: &Item) -> Json {
    match item {
        Item::Semiring(s) => dump_semiring(s),
        Item::Semimodule(m) => dump_semimodule(m),
        Item::SemiunitalSemiring(s) => dump_semiunital_semiring(s),
        Item::SemicounitalSemicoring(c) => dump_semicounital_semicoring(c),
        Item::SemiringMap { source, target, kappa } => {
            let Json::Object(mut fields) = dump_semiring(target) else {
                unreachable!()
            };
            fields.remove("kind");
            fields.insert("base".into(), dump_semiring(source));
            fields.insert("maps".into(), json!({ "kappa": kappa }));
            with_kind("semiring-map", fields)
        }
    }
}
