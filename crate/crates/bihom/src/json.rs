//! JSON file formats.
//!
//! Rationals are strings (`"3"`, `"-1/2"`); integers are also accepted on
//! input. Tensors are sparse lists of `[i, j, k, "c"]` entries and matrices
//! are row-major lists of rows. Tensor bases are ordered lexicographically,
//! `e_i ⊗ e_j` having index `i·dim₂ + j`.
//!
//! | file        | keys                                                        |
//! |-------------|-------------------------------------------------------------|
//! | algebra     | `dim`, `basis`?, `mu` (`e_i e_j` has `c` on `e_k`), `alpha`, `beta` |
//! | coalgebra   | `dim`, `basis`?, `delta` (`Δ(e_i)` has `c` on `e_j⊗e_k`), `psi`, `phi` |
//! | module      | `algebra`, `dim_m`, `rho` (`m_p·e_j` has `c` on `m_q`), `kappa`, `tau` |
//! | comodule    | `coalgebra`, `dim_a`, `gamma` (`γ(a_p)` has `c` on `a_q⊗c_k`), `omega`, `theta` |
//! | morphism    | `kind` (`algebra`, `coalgebra`, `module`, `comodule`), `source`, `target`, `map` |
//! | ideal       | `algebra`, `basis` (spanning vectors)                        |
//! | functional  | `algebra` or `module`, `coeffs`, `witness` (spanning vectors of the ideal) |
//! | poly        | `a`, `b` (`r × r`; `α(x_k) = Σ_l a[l][k] x_l`)               |
//!
//! Nested structures (`algebra`, `source`, …) are either embedded objects or
//! paths relative to the referencing file. Serialization always embeds, sorts
//! keys and reduces rationals, so writing a parsed canonical file reproduces
//! it byte for byte.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use bihom_core::algebra::{default_labels, AlgebraMorphism, AlgebraRef};
use bihom_core::coalgebra::CoalgebraMorphism;
use bihom_core::linalg::{parse_rational, zero, Rational, Vector};
use bihom_core::modules::{
    ComoduleMorphism, FDBiHomComodule, FDBiHomModule, ModuleMorphism, ModuleRef,
};
use bihom_core::poly::{MultiIndex, Poly, PolyBiHomAlgebra};
use bihom_core::{FDBiHomAlgebra, FDBiHomCoalgebra, Matrix, Subspace};
use serde_json::{json, Map, Value};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: invalid JSON: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("{location}: {message}")]
    Schema { location: String, message: String },
    /// Well-formed input describing a mathematically inadmissible object.
    #[error("{location}: {source}")]
    Math { location: String, source: bihom_core::Error },
}

type Result<T> = std::result::Result<T, FormatError>;

/// Where a value came from, for error messages and for resolving relative paths.
#[derive(Clone, Debug)]
pub struct Source {
    file: String,
    dir: PathBuf,
    pointer: String,
}

impl Source {
    pub fn inline(name: &str) -> Self {
        Source { file: name.to_string(), dir: PathBuf::from("."), pointer: String::new() }
    }

    fn child(&self, key: impl std::fmt::Display) -> Self {
        Source { file: self.file.clone(), dir: self.dir.clone(), pointer: format!("{}/{}", self.pointer, key) }
    }

    fn location(&self) -> String {
        format!("{}:{}", self.file, if self.pointer.is_empty() { "/" } else { &self.pointer })
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(FormatError::Schema { location: self.location(), message: message.into() })
    }
}

pub fn read_json(path: &Path) -> Result<(Value, Source)> {
    let shown = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io { path: shown.clone(), source })?;
    let value = serde_json::from_str(&text).map_err(|source| FormatError::Json { path: shown.clone(), source })?;
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from("."));
    Ok((value, Source { file: shown, dir, pointer: String::new() }))
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

pub fn write_json(path: &Path, v: &Value) -> Result<()> {
    fs::write(path, to_canonical_string(v))
        .map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}

fn object<'a>(v: &'a Value, src: &Source) -> Result<&'a Map<String, Value>> {
    v.as_object().map_or_else(|| src.err("expected an object"), Ok)
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, src: &Source) -> Result<&'a Value> {
    obj.get(key).map_or_else(|| src.err(format!("missing key \"{}\"", key)), Ok)
}

fn reject_unknown(obj: &Map<String, Value>, allowed: &[&str], src: &Source) -> Result<()> {
    for k in obj.keys() {
        if !allowed.contains(&k.as_str()) {
            return src.err(format!("unknown key \"{}\"", k));
        }
    }
    Ok(())
}

fn as_usize(v: &Value, src: &Source) -> Result<usize> {
    v.as_u64().map_or_else(|| src.err("expected a non-negative integer"), |n| Ok(n as usize))
}

fn array<'a>(v: &'a Value, src: &Source) -> Result<&'a Vec<Value>> {
    v.as_array().map_or_else(|| src.err("expected an array"), Ok)
}

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn parse_rational_value(v: &Value, src: &Source) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s).map_or_else(|| src.err(format!("not a rational: {:?}", s)), Ok),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Rational::from_integer(i.into())),
            None => src.err("numbers must be integers; write fractions as \"p/q\""),
        },
        _ => src.err("expected a rational"),
    }
}

pub fn vector_to_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_to_json).collect())
}

pub fn parse_vector(v: &Value, len: Option<usize>, src: &Source) -> Result<Vector> {
    let items = array(v, src)?;
    if let Some(n) = len {
        if items.len() != n {
            return src.err(format!("expected {} entries, found {}", n, items.len()));
        }
    }
    items.iter().enumerate().map(|(i, x)| parse_rational_value(x, &src.child(i))).collect()
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|r| vector_to_json(m.row(r))).collect())
}

pub fn parse_matrix(v: &Value, rows: usize, cols: usize, src: &Source) -> Result<Matrix> {
    let items = array(v, src)?;
    if items.len() != rows {
        return src.err(format!("expected {} rows, found {}", rows, items.len()));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for (r, row) in items.iter().enumerate() {
        entries.extend(parse_vector(row, Some(cols), &src.child(r))?);
    }
    Ok(Matrix::new(rows, cols, entries).expect("sizes checked"))
}

/// Square matrix of unknown size.
fn parse_square(v: &Value, src: &Source) -> Result<Matrix> {
    let n = array(v, src)?.len();
    parse_matrix(v, n, n, src)
}

type Entries = Vec<(usize, usize, usize, Rational)>;

fn parse_entries(v: &Value, src: &Source) -> Result<Entries> {
    let mut out = Vec::new();
    for (n, e) in array(v, src)?.iter().enumerate() {
        let s = src.child(n);
        let e = array(e, &s)?;
        if e.len() != 4 {
            return s.err("expected [i, j, k, coefficient]");
        }
        out.push((
            as_usize(&e[0], &s.child(0))?,
            as_usize(&e[1], &s.child(1))?,
            as_usize(&e[2], &s.child(2))?,
            parse_rational_value(&e[3], &s.child(3))?,
        ));
    }
    Ok(out)
}

fn entries_to_json(dims: [usize; 3], get: impl Fn(usize, usize, usize) -> Rational) -> Value {
    let mut out = Vec::new();
    for i in 0..dims[0] {
        for j in 0..dims[1] {
            for k in 0..dims[2] {
                let c = get(i, j, k);
                if c != zero() {
                    out.push(json!([i, j, k, rational_to_json(&c)]));
                }
            }
        }
    }
    Value::Array(out)
}

fn core_err<T>(src: &Source, r: std::result::Result<T, bihom_core::Error>) -> Result<T> {
    match r {
        Ok(v) => Ok(v),
        Err(bihom_core::Error::Input(m)) => src.err(m),
        Err(e) => Err(FormatError::Math { location: src.location(), source: e }),
    }
}

/// Follows a path reference, or returns the embedded value itself.
fn resolve(v: &Value, src: &Source) -> Result<(Value, Source)> {
    match v {
        Value::String(p) => read_json(&src.dir.join(p)),
        _ => Ok((v.clone(), src.clone())),
    }
}

fn labels(obj: &Map<String, Value>, n: usize, src: &Source) -> Result<Vec<String>> {
    match obj.get("basis") {
        None => Ok(default_labels("e", n)),
        Some(v) => {
            let s = src.child("basis");
            let items = array(v, &s)?;
            if items.len() != n {
                return s.err(format!("expected {} labels, found {}", n, items.len()));
            }
            items
                .iter()
                .enumerate()
                .map(|(i, l)| l.as_str().map(String::from).map_or_else(|| s.child(i).err("expected a string"), Ok))
                .collect()
        }
    }
}

pub fn parse_algebra(v: &Value, src: &Source) -> Result<FDBiHomAlgebra> {
    let (v, src) = resolve(v, src)?;
    let obj = object(&v, &src)?;
    reject_unknown(obj, &["alpha", "basis", "beta", "dim", "mu"], &src)?;
    let n = as_usize(field(obj, "dim", &src)?, &src.child("dim"))?;
    let labels = labels(obj, n, &src)?;
    let mu = parse_entries(field(obj, "mu", &src)?, &src.child("mu"))?;
    let alpha = parse_matrix(field(obj, "alpha", &src)?, n, n, &src.child("alpha"))?;
    let beta = parse_matrix(field(obj, "beta", &src)?, n, n, &src.child("beta"))?;
    core_err(&src.child("mu"), FDBiHomAlgebra::from_structure_constants(labels, &mu, alpha, beta))
}

pub fn algebra_to_json(a: &FDBiHomAlgebra) -> Value {
    let n = a.dim();
    json!({
        "dim": n,
        "basis": a.labels(),
        "mu": entries_to_json([n, n, n], |i, j, k| a.structure_constant(i, j, k).clone()),
        "alpha": matrix_to_json(a.alpha()),
        "beta": matrix_to_json(a.beta()),
    })
}

pub fn parse_coalgebra(v: &Value, src: &Source) -> Result<FDBiHomCoalgebra> {
    let (v, src) = resolve(v, src)?;
    let obj = object(&v, &src)?;
    reject_unknown(obj, &["basis", "delta", "dim", "phi", "psi"], &src)?;
    let n = as_usize(field(obj, "dim", &src)?, &src.child("dim"))?;
    let labels = labels(obj, n, &src)?;
    let delta = parse_entries(field(obj, "delta", &src)?, &src.child("delta"))?;
    let psi = parse_matrix(field(obj, "psi", &src)?, n, n, &src.child("psi"))?;
    let phi = parse_matrix(field(obj, "phi", &src)?, n, n, &src.child("phi"))?;
    core_err(&src.child("delta"), FDBiHomCoalgebra::from_structure_constants(labels, &delta, psi, phi))
}

pub fn coalgebra_to_json(c: &FDBiHomCoalgebra) -> Value {
    let n = c.dim();
    json!({
        "dim": n,
        "basis": c.labels(),
        "delta": entries_to_json([n, n, n], |i, j, k| c.costructure_constant(i, j, k).clone()),
        "psi": matrix_to_json(c.psi()),
        "phi": matrix_to_json(c.phi()),
    })
}

pub fn parse_module(v: &Value, src: &Source) -> Result<FDBiHomModule> {
    let (v, src) = resolve(v, src)?;
    let obj = object(&v, &src)?;
    reject_unknown(obj, &["algebra", "dim_m", "kappa", "rho", "tau"], &src)?;
    let a = Arc::new(parse_algebra(field(obj, "algebra", &src)?, &src.child("algebra"))?);
    let dm = as_usize(field(obj, "dim_m", &src)?, &src.child("dim_m"))?;
    let rho = parse_entries(field(obj, "rho", &src)?, &src.child("rho"))?;
    let kappa = parse_matrix(field(obj, "kappa", &src)?, dm, dm, &src.child("kappa"))?;
    let tau = parse_matrix(field(obj, "tau", &src)?, dm, dm, &src.child("tau"))?;
    core_err(&src.child("rho"), FDBiHomModule::from_action_constants(a, dm, &rho, kappa, tau))
}

pub fn module_to_json(m: &FDBiHomModule) -> Value {
    let (dm, dg) = (m.dim(), m.algebra().dim());
    json!({
        "algebra": algebra_to_json(m.algebra()),
        "dim_m": dm,
        "rho": entries_to_json([dm, dg, dm], |p, j, q| m.action_constant(p, j, q).clone()),
        "kappa": matrix_to_json(m.kappa()),
        "tau": matrix_to_json(m.tau()),
    })
}

pub fn parse_comodule(v: &Value, src: &Source) -> Result<FDBiHomComodule> {
    let (v, src) = resolve(v, src)?;
    let obj = object(&v, &src)?;
    reject_unknown(obj, &["coalgebra", "dim_a", "gamma", "omega", "theta"], &src)?;
    let c = Arc::new(parse_coalgebra(field(obj, "coalgebra", &src)?, &src.child("coalgebra"))?);
    let da = as_usize(field(obj, "dim_a", &src)?, &src.child("dim_a"))?;
    let gamma = parse_entries(field(obj, "gamma", &src)?, &src.child("gamma"))?;
    let omega = parse_matrix(field(obj, "omega", &src)?, da, da, &src.child("omega"))?;
    let theta = parse_matrix(field(obj, "theta", &src)?, da, da, &src.child("theta"))?;
    core_err(&src.child("gamma"), FDBiHomComodule::from_coaction_constants(c, da, &gamma, omega, theta))
}

pub fn comodule_to_json(a: &FDBiHomComodule) -> Value {
    let (da, dc) = (a.dim(), a.coalgebra().dim());
    json!({
        "coalgebra": coalgebra_to_json(a.coalgebra()),
        "dim_a": da,
        "gamma": entries_to_json([da, da, dc], |p, q, k| a.coaction_constant(p, q, k).clone()),
        "omega": matrix_to_json(a.omega()),
        "theta": matrix_to_json(a.theta()),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Morphism {
    Algebra(AlgebraMorphism),
    Coalgebra(CoalgebraMorphism),
    Module(ModuleMorphism),
    Comodule(ComoduleMorphism),
}

pub fn parse_morphism(v: &Value, src: &Source) -> Result<Morphism> {
    let (v, src) = resolve(v, src)?;
    let obj = object(&v, &src)?;
    reject_unknown(obj, &["kind", "map", "source", "target"], &src)?;
    let kind = field(obj, "kind", &src)?.as_str().unwrap_or("");
    let (s, t) = (field(obj, "source", &src)?, field(obj, "target", &src)?);
    let (ss, ts) = (src.child("source"), src.child("target"));
    let map = field(obj, "map", &src)?;
    let ms = src.child("map");
    let out = match kind {
        "algebra" => {
            let (a, b) = (Arc::new(parse_algebra(s, &ss)?), Arc::new(parse_algebra(t, &ts)?));
            let m = parse_matrix(map, b.dim(), a.dim(), &ms)?;
            Morphism::Algebra(core_err(&ms, AlgebraMorphism::new(a, b, m))?)
        }
        "coalgebra" => {
            let (a, b) = (Arc::new(parse_coalgebra(s, &ss)?), Arc::new(parse_coalgebra(t, &ts)?));
            let m = parse_matrix(map, b.dim(), a.dim(), &ms)?;
            Morphism::Coalgebra(core_err(&ms, CoalgebraMorphism::new(a, b, m))?)
        }
        "module" => {
            let (a, b) = (Arc::new(parse_module(s, &ss)?), Arc::new(parse_module(t, &ts)?));
            let m = parse_matrix(map, b.dim(), a.dim(), &ms)?;
            Morphism::Module(core_err(&ms, ModuleMorphism::new(a, b, m))?)
        }
        "comodule" => {
            let (a, b) = (Arc::new(parse_comodule(s, &ss)?), Arc::new(parse_comodule(t, &ts)?));
            let m = parse_matrix(map, b.dim(), a.dim(), &ms)?;
            Morphism::Comodule(core_err(&ms, ComoduleMorphism::new(a, b, m))?)
        }
        _ => {
            return src.child("kind").err("expected \"algebra\", \"coalgebra\", \"module\" or \"comodule\"");
        }
    };
    Ok(out)
}

pub fn morphism_to_json(m: &Morphism) -> Value {
    let (kind, source, target, map) = match m {
        Morphism::Algebra(f) => ("algebra", algebra_to_json(&f.source), algebra_to_json(&f.target), &f.map),
        Morphism::Coalgebra(f) => ("coalgebra", coalgebra_to_json(&f.source), coalgebra_to_json(&f.target), &f.map),
        Morphism::Module(f) => ("module", module_to_json(&f.source), module_to_json(&f.target), &f.map),
        Morphism::Comodule(f) => ("comodule", comodule_to_json(&f.source), comodule_to_json(&f.target), &f.map),
    };
    json!({ "kind": kind, "source": source, "target": target, "map": matrix_to_json(map) })
}

fn parse_spanning(v: &Value, n: usize, src: &Source) -> Result<Subspace> {
    let vs = array(v, src)?
        .iter()
        .enumerate()
        .map(|(i, x)| parse_vector(x, Some(n), &src.child(i)))
        .collect::<Result<Vec<_>>>()?;
    core_err(src, Subspace::span(n, &vs))
}

fn subspace_to_json(s: &Subspace) -> Value {
    Value::Array(s.basis_vectors().iter().map(|v| vector_to_json(v)).collect())
}

/// An algebra with a subspace, not yet known to be an ideal.
pub struct IdealFile {
    pub algebra: AlgebraRef,
    pub basis: Subspace,
    pub generators: Vec<Vector>,
}

pub fn parse_ideal(v: &Value, src: &Source) -> Result<IdealFile> {
    let (v, src) = resolve(v, src)?;
    let obj = object(&v, &src)?;
    reject_unknown(obj, &["algebra", "basis"], &src)?;
    let a = Arc::new(parse_algebra(field(obj, "algebra", &src)?, &src.child("algebra"))?);
    let bs = src.child("basis");
    let generators = array(field(obj, "basis", &src)?, &bs)?
        .iter()
        .enumerate()
        .map(|(i, x)| parse_vector(x, Some(a.dim()), &bs.child(i)))
        .collect::<Result<Vec<_>>>()?;
    let basis = core_err(&bs, Subspace::span(a.dim(), &generators))?;
    Ok(IdealFile { algebra: a, basis, generators })
}

pub fn ideal_to_json(a: &FDBiHomAlgebra, s: &Subspace) -> Value {
    json!({ "algebra": algebra_to_json(a), "basis": subspace_to_json(s) })
}

/// A functional together with the subspace claimed as its witness.
pub struct FunctionalFile {
    pub algebra: AlgebraRef,
    pub coeffs: Vector,
    pub witness: Subspace,
}

pub fn parse_functional(v: &Value, src: &Source) -> Result<FunctionalFile> {
    let (v, src) = resolve(v, src)?;
    let obj = object(&v, &src)?;
    reject_unknown(obj, &["algebra", "coeffs", "witness"], &src)?;
    let a = Arc::new(parse_algebra(field(obj, "algebra", &src)?, &src.child("algebra"))?);
    let coeffs = parse_vector(field(obj, "coeffs", &src)?, Some(a.dim()), &src.child("coeffs"))?;
    let witness = parse_spanning(field(obj, "witness", &src)?, a.dim(), &src.child("witness"))?;
    Ok(FunctionalFile { algebra: a, coeffs, witness })
}

pub fn functional_to_json(a: &FDBiHomAlgebra, coeffs: &[Rational], witness: &Subspace) -> Value {
    json!({ "algebra": algebra_to_json(a), "coeffs": vector_to_json(coeffs), "witness": subspace_to_json(witness) })
}

pub struct ModuleFunctionalFile {
    pub module: ModuleRef,
    pub coeffs: Vector,
    pub witness: Subspace,
}

pub fn parse_module_functional(v: &Value, src: &Source) -> Result<ModuleFunctionalFile> {
    let (v, src) = resolve(v, src)?;
    let obj = object(&v, &src)?;
    reject_unknown(obj, &["coeffs", "module", "witness"], &src)?;
    let m = Arc::new(parse_module(field(obj, "module", &src)?, &src.child("module"))?);
    let coeffs = parse_vector(field(obj, "coeffs", &src)?, Some(m.dim()), &src.child("coeffs"))?;
    let witness = parse_spanning(field(obj, "witness", &src)?, m.algebra().dim(), &src.child("witness"))?;
    Ok(ModuleFunctionalFile { module: m, coeffs, witness })
}

pub fn module_functional_to_json(m: &FDBiHomModule, coeffs: &[Rational], witness: &Subspace) -> Value {
    json!({ "module": module_to_json(m), "coeffs": vector_to_json(coeffs), "witness": subspace_to_json(witness) })
}

pub fn parse_poly_algebra(v: &Value, src: &Source) -> Result<PolyBiHomAlgebra> {
    let (v, src) = resolve(v, src)?;
    let obj = object(&v, &src)?;
    reject_unknown(obj, &["a", "b"], &src)?;
    let a = parse_square(field(obj, "a", &src)?, &src.child("a"))?;
    let b = parse_matrix(field(obj, "b", &src)?, a.rows(), a.rows(), &src.child("b"))?;
    core_err(&src, PolyBiHomAlgebra::new(a, b))
}

pub fn poly_algebra_to_json(p: &PolyBiHomAlgebra) -> Value {
    json!({ "a": matrix_to_json(p.a()), "b": matrix_to_json(p.b()) })
}

/// `[[exponents, "c"], …]` in monomial order.
pub fn poly_to_json(p: &Poly) -> Value {
    Value::Array(p.terms().iter().map(|(m, c)| json!([m.0, rational_to_json(c)])).collect())
}

pub fn multi_index_from_str(s: &str) -> std::result::Result<MultiIndex, String> {
    if s.trim().is_empty() {
        return Ok(MultiIndex(Vec::new()));
    }
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|e| format!("bad exponent \"{}\": {}", t, e)))
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(MultiIndex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use bihom_core::fixtures::{e1, e1_regular_module};

    #[test]
    fn algebra_round_trip_is_byte_identical() {
        let text = to_canonical_string(&algebra_to_json(&e1()));
        let v: Value = serde_json::from_str(&text).unwrap();
        let a = parse_algebra(&v, &Source::inline("E1")).unwrap();
        assert_eq!(a, e1());
        assert_eq!(to_canonical_string(&algebra_to_json(&a)), text);
    }

    #[test]
    fn module_round_trip() {
        let m = e1_regular_module();
        let v = module_to_json(&m);
        assert_eq!(parse_module(&v, &Source::inline("m")).unwrap(), m);
    }

    #[test]
    fn schema_errors_carry_a_location() {
        let v = json!({ "dim": 2, "mu": [[0, 0, 5, "1"]], "alpha": [["1", "0"], ["0", "1"]], "beta": [["1", "0"], ["0", "1"]] });
        let err = parse_algebra(&v, &Source::inline("bad.json")).unwrap_err().to_string();
        assert!(err.starts_with("bad.json:/mu"), "{}", err);
        let v = json!({ "dim": 2, "mu": [], "alpha": [["1", "0"]], "beta": [] });
        let err = parse_algebra(&v, &Source::inline("bad.json")).unwrap_err().to_string();
        assert!(err.contains("/alpha"), "{}", err);
        let v = json!({ "dim": 1, "mu": [[0, 0, 0, "1/0"]], "alpha": [["1"]], "beta": [["1"]] });
        assert!(parse_algebra(&v, &Source::inline("z")).is_err());
        let v = json!({ "dim": 1, "mu": [], "alpha": [["1"]], "beta": [["1"]], "extra": 1 });
        assert!(parse_algebra(&v, &Source::inline("z")).is_err());
    }

    #[test]
    fn rationals_are_reduced() {
        let v = json!(["2/4", 3, "-6/3"]);
        let r = parse_vector(&v, Some(3), &Source::inline("v")).unwrap();
        assert_eq!(vector_to_json(&r), json!(["1/2", "3", "-2"]));
    }

    #[test]
    fn multi_index_parsing() {
        assert_eq!(multi_index_from_str("1, 2").unwrap(), MultiIndex(vec![1, 2]));
        assert!(multi_index_from_str("1,x").is_err());
    }
}
