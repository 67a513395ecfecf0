//! JSON document model for the file-based front end.
//!
//! Every structure the tool reads or writes is one flat `Document`: a kind
//! tag, dimensions, and named sparse coefficient lists. Scalars are exact
//! rational strings ("p/q" or "n", never floats), indices are 0-based, and
//! emitted entry lists are sorted lexicographically so golden files diff
//! cleanly. Basis labels are cosmetic; all semantics is by index.

use crate::algebra::{Algebra, DiffAlgebra};
use crate::bialgebra::{ASIBialgebra, BilForm, Coalgebra, DiffASIBialgebra};
use crate::bimodule::Bimodule;
use crate::dendriform::{Dendriform, DiffDendriform, Zinbiel};
use crate::matrix::Matrix;
use crate::poisson::{PoissonAlgebra, PoissonBialgebra};
use crate::scalar::{format_scalar, parse_scalar, Scalar};
use crate::tensor::{Element2, StructTensor};
use serde::{Deserialize, Serialize};
use std::fmt;

pub type Entry2 = (usize, usize, String);
pub type Entry3 = (usize, usize, usize, String);
pub type MapEntries = Vec<Entry2>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Algebra,
    DiffAlgebra,
    Bimodule,
    AsiBialgebra,
    DiffAsiBialgebra,
    Zinbiel,
    Dendriform,
    Poisson,
    PoissonBialgebra,
    RElement,
    LinearMap,
    BilinearForm,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::Algebra => "algebra",
            Kind::DiffAlgebra => "diff_algebra",
            Kind::Bimodule => "bimodule",
            Kind::AsiBialgebra => "asi_bialgebra",
            Kind::DiffAsiBialgebra => "diff_asi_bialgebra",
            Kind::Zinbiel => "zinbiel",
            Kind::Dendriform => "dendriform",
            Kind::Poisson => "poisson",
            Kind::PoissonBialgebra => "poisson_bialgebra",
            Kind::RElement => "r_element",
            Kind::LinearMap => "linear_map",
            Kind::BilinearForm => "bilinear_form",
        };
        f.write_str(s)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum DocError {
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Shape(String),
}

fn shape(msg: impl Into<String>) -> DocError {
    DocError::Shape(msg.into())
}

/// One structure definition. Field relevance depends on `kind`; parsing
/// rejects populated fields the kind does not use.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alg_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cols: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub star: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub succ: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prec: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prod: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cobracket: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<Entry2>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<Entry2>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<MapEntries>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: Option<Vec<MapEntries>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<Vec<MapEntries>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi: Option<Vec<MapEntries>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<Vec<MapEntries>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Vec<MapEntries>>,
}

impl Document {
    fn empty(kind: Kind) -> Self {
        Document {
            kind,
            dim: None,
            alg_dim: None,
            v_dim: None,
            rows: None,
            cols: None,
            labels: None,
            mult: None,
            star: None,
            succ: None,
            prec: None,
            bracket: None,
            prod: None,
            comult: None,
            cobracket: None,
            entries: None,
            r: None,
            phi: None,
            psi: None,
            omega: None,
            pi: None,
            left: None,
            right: None,
        }
    }
}

/// Field names a kind may populate, beyond `kind` and `labels`.
fn allowed_fields(kind: Kind) -> &'static [&'static str] {
    match kind {
        Kind::Algebra => &["dim", "mult", "r"],
        Kind::DiffAlgebra => &["dim", "mult", "phi", "psi", "r"],
        Kind::Bimodule => &["alg_dim", "v_dim", "mult", "left", "right", "phi", "omega", "pi"],
        Kind::AsiBialgebra => &["dim", "mult", "comult"],
        Kind::DiffAsiBialgebra => &["dim", "mult", "comult", "phi", "psi"],
        Kind::Zinbiel => &["dim", "star", "phi"],
        Kind::Dendriform => &["dim", "succ", "prec", "phi"],
        Kind::Poisson => &["dim", "bracket", "prod"],
        Kind::PoissonBialgebra => &["dim", "bracket", "prod", "comult", "cobracket"],
        Kind::RElement => &["dim", "entries"],
        Kind::LinearMap => &["rows", "cols", "entries"],
        Kind::BilinearForm => &["dim", "entries"],
    }
}

pub fn parse_document(text: &str) -> Result<Document, DocError> {
    let doc: Document = serde_json::from_str(text)?;
    let allowed = allowed_fields(doc.kind);
    let populated: &[(&str, bool)] = &[
        ("dim", doc.dim.is_some()),
        ("alg_dim", doc.alg_dim.is_some()),
        ("v_dim", doc.v_dim.is_some()),
        ("rows", doc.rows.is_some()),
        ("cols", doc.cols.is_some()),
        ("mult", doc.mult.is_some()),
        ("star", doc.star.is_some()),
        ("succ", doc.succ.is_some()),
        ("prec", doc.prec.is_some()),
        ("bracket", doc.bracket.is_some()),
        ("prod", doc.prod.is_some()),
        ("comult", doc.comult.is_some()),
        ("cobracket", doc.cobracket.is_some()),
        ("entries", doc.entries.is_some()),
        ("r", doc.r.is_some()),
        ("phi", doc.phi.is_some()),
        ("psi", doc.psi.is_some()),
        ("omega", doc.omega.is_some()),
        ("pi", doc.pi.is_some()),
        ("left", doc.left.is_some()),
        ("right", doc.right.is_some()),
    ];
    for (name, set) in populated {
        if *set && !allowed.contains(name) {
            return Err(shape(format!(
                "field \"{name}\" is not valid for kind \"{}\"",
                doc.kind
            )));
        }
    }
    Ok(doc)
}

/// Canonical text form: pretty JSON, fixed field order, sorted sparse
/// entries, trailing newline. Byte-identical for equal documents.
pub fn render_document(doc: &Document) -> String {
    let mut s = to_json_pretty(doc);
    s.push('\n');
    s
}

/// Pretty JSON that keeps leaf tuples on one line: sparse entries, residual
/// terms, index lists, and label lists stay compact while the surrounding
/// structure is indented normally. Depends on preserve_order for field order.
pub fn to_json_pretty<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("json serialization");
    let mut out = String::new();
    write_value(&v, None, 0, 0, &mut out);
    out
}

/// Array nesting depth below the named key at which rendering goes inline.
fn inline_depth(key: &str) -> usize {
    match key {
        "indices" | "labels" => 1,
        "mult" | "star" | "succ" | "prec" | "bracket" | "prod" | "comult" | "cobracket"
        | "entries" | "r" | "phi" | "psi" | "omega" | "pi" | "left" | "right" | "residual" => 2,
        _ => usize::MAX,
    }
}

fn write_value(
    v: &serde_json::Value,
    key: Option<&str>,
    rel: usize,
    indent: usize,
    out: &mut String,
) {
    use serde_json::Value;
    match v {
        Value::Array(items) => {
            let inline = items.is_empty() || key.is_some_and(|k| rel + 1 >= inline_depth(k));
            if inline {
                write_inline(v, out);
                return;
            }
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push('\n');
                push_indent(indent + 1, out);
                write_value(item, key, rel + 1, indent + 1, out);
            }
            out.push('\n');
            push_indent(indent, out);
            out.push(']');
        }
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push('{');
            for (i, (k, item)) in map.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push('\n');
                push_indent(indent + 1, out);
                out.push_str(&serde_json::to_string(k).expect("key"));
                out.push_str(": ");
                write_value(item, Some(k), 0, indent + 1, out);
            }
            out.push('\n');
            push_indent(indent, out);
            out.push('}');
        }
        _ => write_inline(v, out),
    }
}

fn write_inline(v: &serde_json::Value, out: &mut String) {
    use serde_json::Value;
    match v {
        Value::Array(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_inline(item, out);
            }
            out.push(']');
        }
        Value::Object(map) => {
            out.push('{');
            for (i, (k, item)) in map.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&serde_json::to_string(k).expect("key"));
                out.push_str(": ");
                write_inline(item, out);
            }
            out.push('}');
        }
        _ => out.push_str(&serde_json::to_string(v).expect("json leaf")),
    }
}

fn push_indent(level: usize, out: &mut String) {
    for _ in 0..level {
        out.push_str("  ");
    }
}

fn scalar_at(raw: &str, field: &str) -> Result<Scalar, DocError> {
    parse_scalar(raw).map_err(|e| shape(format!("{field}: bad scalar \"{raw}\": {e}")))
}

fn tensor3(entries: &[Entry3], dim: usize, field: &str) -> Result<StructTensor, DocError> {
    let mut t = StructTensor::zero(dim);
    for (pos, (i, j, k, c)) in entries.iter().enumerate() {
        if *i >= dim || *j >= dim || *k >= dim {
            return Err(shape(format!(
                "{field}[{pos}]: index ({i}, {j}, {k}) out of range for dim {dim}"
            )));
        }
        let x = scalar_at(c, &format!("{field}[{pos}]"))?;
        t.add_to(*i, *j, *k, &x);
    }
    Ok(t)
}

fn matrix2(entries: &[Entry2], rows: usize, cols: usize, field: &str) -> Result<Matrix, DocError> {
    let mut m = Matrix::zero(rows, cols);
    for (pos, (i, j, c)) in entries.iter().enumerate() {
        if *i >= rows || *j >= cols {
            return Err(shape(format!(
                "{field}[{pos}]: index ({i}, {j}) out of range for shape {rows}x{cols}"
            )));
        }
        let x = scalar_at(c, &format!("{field}[{pos}]"))?;
        m.set(*i, *j, m.get(*i, *j) + x);
    }
    Ok(m)
}

fn element2(entries: &[Entry2], dim: usize, field: &str) -> Result<Element2, DocError> {
    let mut e = Element2::zero(dim, dim);
    for (pos, (i, j, c)) in entries.iter().enumerate() {
        if *i >= dim || *j >= dim {
            return Err(shape(format!(
                "{field}[{pos}]: index ({i}, {j}) out of range for dim {dim}"
            )));
        }
        let x = scalar_at(c, &format!("{field}[{pos}]"))?;
        e.add_to(*i, *j, &x);
    }
    Ok(e)
}

fn family(maps: &[MapEntries], dim: usize, field: &str) -> Result<Vec<Matrix>, DocError> {
    maps.iter()
        .enumerate()
        .map(|(k, m)| matrix2(m, dim, dim, &format!("{field}[{k}]")))
        .collect()
}

fn sparse3(t: &StructTensor) -> Vec<Entry3> {
    t.entries()
        .into_iter()
        .map(|(i, j, k, c)| (i, j, k, format_scalar(&c)))
        .collect()
}

fn sparse2_matrix(m: &Matrix) -> Vec<Entry2> {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let c = m.get(i, j);
            if !num::Zero::is_zero(c) {
                out.push((i, j, format_scalar(c)));
            }
        }
    }
    out
}

fn sparse2_element(e: &Element2) -> Vec<Entry2> {
    e.entries()
        .into_iter()
        .map(|(i, j, c)| (i, j, format_scalar(&c)))
        .collect()
}

fn sparse_family(maps: &[Matrix]) -> Vec<MapEntries> {
    maps.iter().map(sparse2_matrix).collect()
}

macro_rules! req {
    ($doc:expr, $field:ident) => {
        $doc.$field.as_ref().ok_or_else(|| {
            shape(format!(
                "kind \"{}\" requires field \"{}\"",
                $doc.kind,
                stringify!($field)
            ))
        })?
    };
}

impl Document {
    fn expect_kind(&self, want: &[Kind]) -> Result<(), DocError> {
        if want.contains(&self.kind) {
            Ok(())
        } else {
            let names: Vec<String> = want.iter().map(|k| format!("\"{k}\"")).collect();
            Err(shape(format!(
                "expected kind {}, got \"{}\"",
                names.join(" or "),
                self.kind
            )))
        }
    }

    pub fn as_algebra(&self) -> Result<Algebra, DocError> {
        self.expect_kind(&[Kind::Algebra])?;
        let dim = *req!(self, dim);
        Ok(Algebra::new(tensor3(req!(self, mult), dim, "mult")?))
    }

    /// Derivation family Φ; `psi` stays optional and is read separately.
    pub fn as_diff_algebra(&self) -> Result<DiffAlgebra, DocError> {
        self.expect_kind(&[Kind::DiffAlgebra])?;
        let dim = *req!(self, dim);
        Ok(DiffAlgebra::new(
            Algebra::new(tensor3(req!(self, mult), dim, "mult")?),
            family(req!(self, phi), dim, "phi")?,
        ))
    }

    pub fn psi_family(&self, dim: usize) -> Result<Option<Vec<Matrix>>, DocError> {
        match &self.psi {
            None => Ok(None),
            Some(maps) => Ok(Some(family(maps, dim, "psi")?)),
        }
    }

    /// Embedded r ∈ A⊗A, present on algebra and diff_algebra documents that
    /// feed the coboundary construction.
    pub fn embedded_r(&self, dim: usize) -> Result<Option<Element2>, DocError> {
        match &self.r {
            None => Ok(None),
            Some(entries) => Ok(Some(element2(entries, dim, "r")?)),
        }
    }

    pub fn as_bimodule(&self) -> Result<BimoduleParts, DocError> {
        self.expect_kind(&[Kind::Bimodule])?;
        let n = *req!(self, alg_dim);
        let m = *req!(self, v_dim);
        let alg = Algebra::new(tensor3(req!(self, mult), n, "mult")?);
        let l = req!(self, left);
        let r = req!(self, right);
        if l.len() != n || r.len() != n {
            return Err(shape(format!(
                "left and right need one {m}x{m} map per algebra basis vector ({n})"
            )));
        }
        let to_maps = |maps: &[MapEntries], field: &str| -> Result<Vec<Matrix>, DocError> {
            maps.iter()
                .enumerate()
                .map(|(k, e)| matrix2(e, m, m, &format!("{field}[{k}]")))
                .collect()
        };
        let bm = Bimodule::new(n, m, to_maps(l, "left")?, to_maps(r, "right")?);
        let phi = match &self.phi {
            None => None,
            Some(maps) => Some(family(maps, n, "phi")?),
        };
        let omega = match &self.omega {
            None => None,
            Some(maps) => Some(to_maps(maps, "omega")?),
        };
        let pi = match &self.pi {
            None => None,
            Some(maps) => Some(to_maps(maps, "pi")?),
        };
        Ok(BimoduleParts {
            alg,
            bm,
            phi,
            omega,
            pi,
        })
    }

    pub fn as_asi_bialgebra(&self) -> Result<ASIBialgebra, DocError> {
        self.expect_kind(&[Kind::AsiBialgebra])?;
        let dim = *req!(self, dim);
        Ok(ASIBialgebra::new(
            Algebra::new(tensor3(req!(self, mult), dim, "mult")?),
            Coalgebra::new(tensor3(req!(self, comult), dim, "comult")?),
        ))
    }

    pub fn as_diff_asi_bialgebra(&self) -> Result<DiffASIBialgebra, DocError> {
        self.expect_kind(&[Kind::DiffAsiBialgebra])?;
        let dim = *req!(self, dim);
        let phi = family(req!(self, phi), dim, "phi")?;
        let psi = family(req!(self, psi), dim, "psi")?;
        if phi.len() != psi.len() {
            return Err(shape(format!(
                "phi has {} maps but psi has {}",
                phi.len(),
                psi.len()
            )));
        }
        Ok(DiffASIBialgebra::new(
            ASIBialgebra::new(
                Algebra::new(tensor3(req!(self, mult), dim, "mult")?),
                Coalgebra::new(tensor3(req!(self, comult), dim, "comult")?),
            ),
            phi,
            psi,
        ))
    }

    /// Missing `phi` means an empty family.
    pub fn as_zinbiel(&self) -> Result<Zinbiel, DocError> {
        self.expect_kind(&[Kind::Zinbiel])?;
        let dim = *req!(self, dim);
        let phi = match &self.phi {
            None => Vec::new(),
            Some(maps) => family(maps, dim, "phi")?,
        };
        Ok(Zinbiel::new(tensor3(req!(self, star), dim, "star")?, phi))
    }

    pub fn as_dendriform(&self) -> Result<DiffDendriform, DocError> {
        self.expect_kind(&[Kind::Dendriform])?;
        let dim = *req!(self, dim);
        let phi = match &self.phi {
            None => Vec::new(),
            Some(maps) => family(maps, dim, "phi")?,
        };
        Ok(DiffDendriform::new(
            Dendriform::new(
                tensor3(req!(self, succ), dim, "succ")?,
                tensor3(req!(self, prec), dim, "prec")?,
            ),
            phi,
        ))
    }

    pub fn as_poisson(&self) -> Result<PoissonAlgebra, DocError> {
        self.expect_kind(&[Kind::Poisson])?;
        let dim = *req!(self, dim);
        Ok(PoissonAlgebra::new(
            tensor3(req!(self, bracket), dim, "bracket")?,
            tensor3(req!(self, prod), dim, "prod")?,
        ))
    }

    pub fn as_poisson_bialgebra(&self) -> Result<PoissonBialgebra, DocError> {
        self.expect_kind(&[Kind::PoissonBialgebra])?;
        let dim = *req!(self, dim);
        Ok(PoissonBialgebra::new(
            PoissonAlgebra::new(
                tensor3(req!(self, bracket), dim, "bracket")?,
                tensor3(req!(self, prod), dim, "prod")?,
            ),
            tensor3(req!(self, cobracket), dim, "cobracket")?,
            tensor3(req!(self, comult), dim, "comult")?,
        ))
    }

    pub fn as_r_element(&self) -> Result<Element2, DocError> {
        self.expect_kind(&[Kind::RElement])?;
        let dim = *req!(self, dim);
        element2(req!(self, entries), dim, "entries")
    }

    pub fn as_linear_map(&self) -> Result<Matrix, DocError> {
        self.expect_kind(&[Kind::LinearMap])?;
        let rows = *req!(self, rows);
        let cols = *req!(self, cols);
        matrix2(req!(self, entries), rows, cols, "entries")
    }

    pub fn as_bilinear_form(&self) -> Result<BilForm, DocError> {
        self.expect_kind(&[Kind::BilinearForm])?;
        let dim = *req!(self, dim);
        Ok(BilForm::new(matrix2(req!(self, entries), dim, dim, "entries")?))
    }

    /// Dimension field of structure kinds, for ops that only need a size.
    pub fn any_dim(&self) -> Result<usize, DocError> {
        if let Some(d) = self.dim {
            return Ok(d);
        }
        if let Some(d) = self.alg_dim {
            return Ok(d);
        }
        Err(shape(format!("kind \"{}\" carries no dimension", self.kind)))
    }
}

/// Bimodule document contents: base algebra, actions, and whichever optional
/// families are present.
pub struct BimoduleParts {
    pub alg: Algebra,
    pub bm: Bimodule,
    pub phi: Option<Vec<Matrix>>,
    pub omega: Option<Vec<Matrix>>,
    pub pi: Option<Vec<Matrix>>,
}

pub fn from_algebra(a: &Algebra) -> Document {
    let mut d = Document::empty(Kind::Algebra);
    d.dim = Some(a.dim());
    d.mult = Some(sparse3(&a.mult));
    d
}

pub fn from_diff_algebra(a: &DiffAlgebra) -> Document {
    let mut d = Document::empty(Kind::DiffAlgebra);
    d.dim = Some(a.dim());
    d.mult = Some(sparse3(&a.base.mult));
    d.phi = Some(sparse_family(&a.phi));
    d
}

pub fn from_asi_bialgebra(b: &ASIBialgebra) -> Document {
    let mut d = Document::empty(Kind::AsiBialgebra);
    d.dim = Some(b.dim());
    d.mult = Some(sparse3(&b.alg.mult));
    d.comult = Some(sparse3(&b.coalg.comult));
    d
}

pub fn from_diff_asi_bialgebra(b: &DiffASIBialgebra) -> Document {
    let mut d = Document::empty(Kind::DiffAsiBialgebra);
    d.dim = Some(b.dim());
    d.mult = Some(sparse3(&b.bialg.alg.mult));
    d.comult = Some(sparse3(&b.bialg.coalg.comult));
    d.phi = Some(sparse_family(&b.phi));
    d.psi = Some(sparse_family(&b.psi));
    d
}

pub fn from_zinbiel(z: &Zinbiel) -> Document {
    let mut d = Document::empty(Kind::Zinbiel);
    d.dim = Some(z.dim());
    d.star = Some(sparse3(&z.star));
    if !z.phi.is_empty() {
        d.phi = Some(sparse_family(&z.phi));
    }
    d
}

pub fn from_dendriform(dd: &DiffDendriform) -> Document {
    let mut d = Document::empty(Kind::Dendriform);
    d.dim = Some(dd.base.dim());
    d.succ = Some(sparse3(&dd.base.succ));
    d.prec = Some(sparse3(&dd.base.prec));
    if !dd.phi.is_empty() {
        d.phi = Some(sparse_family(&dd.phi));
    }
    d
}

pub fn from_poisson(p: &PoissonAlgebra) -> Document {
    let mut d = Document::empty(Kind::Poisson);
    d.dim = Some(p.dim());
    d.bracket = Some(sparse3(&p.bracket));
    d.prod = Some(sparse3(&p.prod));
    d
}

pub fn from_poisson_bialgebra(p: &PoissonBialgebra) -> Document {
    let mut d = Document::empty(Kind::PoissonBialgebra);
    d.dim = Some(p.dim());
    d.bracket = Some(sparse3(&p.alg.bracket));
    d.prod = Some(sparse3(&p.alg.prod));
    d.comult = Some(sparse3(&p.comult));
    d.cobracket = Some(sparse3(&p.cobracket));
    d
}

pub fn from_r_element(r: &Element2) -> Document {
    let (a, b) = r.dims();
    assert_eq!(a, b, "r element is square");
    let mut d = Document::empty(Kind::RElement);
    d.dim = Some(a);
    d.entries = Some(sparse2_element(r));
    d
}

pub fn from_linear_map(m: &Matrix) -> Document {
    let mut d = Document::empty(Kind::LinearMap);
    d.rows = Some(m.rows());
    d.cols = Some(m.cols());
    d.entries = Some(sparse2_matrix(m));
    d
}

pub fn from_bilinear_form(f: &BilForm) -> Document {
    let mut d = Document::empty(Kind::BilinearForm);
    d.dim = Some(f.dim());
    d.entries = Some(sparse2_matrix(&f.b));
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{assoc3, d1, d2, zinbiel3};
    use crate::scalar::int;

    #[test]
    fn zinbiel_document_round_trips_exactly() {
        let z = Zinbiel::new(zinbiel3(), vec![d1(), d2()]);
        let doc = from_zinbiel(&z);
        let text = render_document(&doc);
        let back = parse_document(&text).unwrap();
        assert_eq!(back.as_zinbiel().unwrap(), z);
        assert_eq!(render_document(&back), text);
    }

    #[test]
    fn rational_scalars_survive_the_round_trip() {
        let mut m = Matrix::zero(2, 2);
        m.set(0, 1, parse_scalar("-7/3").unwrap());
        let text = render_document(&from_linear_map(&m));
        let back = parse_document(&text).unwrap().as_linear_map().unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn duplicate_entries_accumulate() {
        let text = r#"{"kind":"algebra","dim":1,"mult":[[0,0,0,"1"],[0,0,0,"1"]]}"#;
        let a = parse_document(text).unwrap().as_algebra().unwrap();
        assert_eq!(a.mult.get(0, 0, 0), &int(2));
    }

    #[test]
    fn out_of_range_index_is_a_shape_error() {
        let text = r#"{"kind":"algebra","dim":2,"mult":[[0,0,2,"1"]]}"#;
        let err = parse_document(text).unwrap().as_algebra().unwrap_err();
        assert!(err.to_string().contains("out of range"));
    }

    #[test]
    fn float_scalars_are_rejected() {
        let text = r#"{"kind":"algebra","dim":1,"mult":[[0,0,0,"0.5"]]}"#;
        let err = parse_document(text).unwrap().as_algebra().unwrap_err();
        assert!(err.to_string().contains("bad scalar"));
    }

    #[test]
    fn wrong_kind_field_is_rejected_at_parse_time() {
        let text = r#"{"kind":"zinbiel","dim":3,"star":[],"bracket":[]}"#;
        let err = parse_document(text).unwrap_err();
        assert!(err.to_string().contains("not valid for kind"));
    }

    #[test]
    fn unknown_key_is_rejected_with_position() {
        let text = r#"{"kind":"algebra","dim":1,"mult":[],"extra":1}"#;
        assert!(parse_document(text).is_err());
    }

    #[test]
    fn missing_required_field_is_reported_by_name() {
        let text = r#"{"kind":"poisson","dim":2,"bracket":[]}"#;
        let err = parse_document(text).unwrap().as_poisson().unwrap_err();
        assert!(err.to_string().contains("prod"));
    }

    #[test]
    fn algebra_document_entries_are_sorted() {
        let doc = from_algebra(&Algebra::new(assoc3()));
        let entries = doc.mult.unwrap();
        let mut sorted = entries.clone();
        sorted.sort();
        assert_eq!(entries, sorted);
    }
}
