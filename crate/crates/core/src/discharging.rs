//! Charge bookkeeping for the four discharging schemes, in exact rational
//! arithmetic. Charges start from the scheme's vertex and face formulas,
//! move by the scheme's rules, and every move is logged.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use thiserror::Error;

use crate::embedding::{EmbeddedGraph, EmbeddingError, FaceWalk};
use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DischargingError {
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error("unknown scheme `{0}` (expected s34, s35, s41 or s51)")]
    UnknownScheme(String),
    #[error("threshold K must be a nonnegative rational, got `{0}`")]
    BadThreshold(String),
    #[error("charge not conserved: {0}")]
    NotConserved(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// `(2,K,K)`: charges `d(v) - 6`, `2d(f) - 6`; high means degree `>= K + 3`.
    S34,
    /// `(0,0,K,K)`: same charges; high means degree `>= K + 4`.
    S35,
    /// `(0,K)` triangle-free: `d(v) - 4`, `d(f) - 4`; high `>= K + 3`.
    S41,
    /// `(0,K)` girth 7: `5d(v) - 14`, `2d(f) - 14`; high `>= K + 2`.
    S51,
}

impl Scheme {
    pub const ALL: [Scheme; 4] = [Scheme::S34, Scheme::S35, Scheme::S41, Scheme::S51];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::S34 => "s34",
            Scheme::S35 => "s35",
            Scheme::S41 => "s41",
            Scheme::S51 => "s51",
        }
    }

    /// `(a, b)` with vertex charge `a * d - b`.
    fn vertex_formula(self) -> (i64, i64) {
        match self {
            Scheme::S34 | Scheme::S35 => (1, 6),
            Scheme::S41 => (1, 4),
            Scheme::S51 => (5, 14),
        }
    }

    fn face_formula(self) -> (i64, i64) {
        match self {
            Scheme::S34 | Scheme::S35 => (2, 6),
            Scheme::S41 => (1, 4),
            Scheme::S51 => (2, 14),
        }
    }

    /// `(a, b)` with total charge `a * g - b` for Euler genus `g`.
    pub fn euler_total(self) -> (i64, i64) {
        match self {
            Scheme::S34 | Scheme::S35 => (6, 12),
            Scheme::S41 => (4, 8),
            Scheme::S51 => (14, 28),
        }
    }

    pub fn high_offset(self) -> i64 {
        match self {
            Scheme::S34 | Scheme::S41 => 3,
            Scheme::S35 => 4,
            Scheme::S51 => 2,
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = DischargingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Scheme::ALL
            .into_iter()
            .find(|x| x.name() == s.to_ascii_lowercase())
            .ok_or_else(|| DischargingError::UnknownScheme(s.to_string()))
    }
}

pub fn parse_threshold(s: &str) -> Result<BigRational, DischargingError> {
    let k: BigRational = s.trim().parse().map_err(|_| DischargingError::BadThreshold(s.to_string()))?;
    if k.is_negative() {
        return Err(DischargingError::BadThreshold(s.to_string()));
    }
    Ok(k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(VertexId),
    Face(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v{v}"),
            Element::Face(i) => write!(f, "f{i}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexClass {
    Low,
    /// Only used by S41: degree at least 4 and not high.
    Medium,
    High,
}

impl fmt::Display for VertexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VertexClass::Low => "low",
            VertexClass::Medium => "medium",
            VertexClass::High => "high",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transfer {
    pub rule: &'static str,
    pub from: Element,
    pub to: Element,
    pub amount: BigRational,
}

/// Initial and current charges of every vertex and face (faces indexed as
/// in [`EmbeddedGraph::faces`]) plus the log of every transfer applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeLedger {
    pub scheme: Scheme,
    pub initial_vertex: Vec<BigRational>,
    pub initial_face: Vec<BigRational>,
    pub vertex: Vec<BigRational>,
    pub face: Vec<BigRational>,
    pub transfers: Vec<Transfer>,
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl ChargeLedger {
    fn slot(&mut self, e: Element) -> &mut BigRational {
        match e {
            Element::Vertex(v) => &mut self.vertex[v],
            Element::Face(i) => &mut self.face[i],
        }
    }

    fn send(&mut self, rule: &'static str, from: Element, to: Element, amount: BigRational) {
        *self.slot(from) -= &amount;
        *self.slot(to) += &amount;
        self.transfers.push(Transfer { rule, from, to, amount });
    }

    pub fn initial_total(&self) -> BigRational {
        self.initial_vertex.iter().chain(&self.initial_face).sum()
    }

    pub fn total(&self) -> BigRational {
        self.vertex.iter().chain(&self.face).sum()
    }

    pub fn charge(&self, e: Element) -> &BigRational {
        match e {
            Element::Vertex(v) => &self.vertex[v],
            Element::Face(i) => &self.face[i],
        }
    }

    /// Recompute every final charge as initial plus inflow minus outflow from
    /// the log, and compare totals.
    pub fn check_conservation(&self) -> Result<(), DischargingError> {
        let mut vertex = self.initial_vertex.clone();
        let mut face = self.initial_face.clone();
        for t in &self.transfers {
            for (e, sign) in [(t.from, -1), (t.to, 1)] {
                let slot = match e {
                    Element::Vertex(v) => &mut vertex[v],
                    Element::Face(i) => &mut face[i],
                };
                if sign < 0 {
                    *slot -= &t.amount;
                } else {
                    *slot += &t.amount;
                }
            }
        }
        if vertex != self.vertex || face != self.face {
            return Err(DischargingError::NotConserved("final charges disagree with the transfer log".into()));
        }
        if self.total() != self.initial_total() {
            return Err(DischargingError::NotConserved(format!(
                "total moved from {} to {}",
                self.initial_total(),
                self.total()
            )));
        }
        Ok(())
    }
}

/// Initial charges; the embedding must be connected (cellular).
pub fn initial_charges(g: &EmbeddedGraph, scheme: Scheme) -> Result<ChargeLedger, DischargingError> {
    g.euler_genus()?;
    let graph = g.graph();
    let (va, vb) = scheme.vertex_formula();
    let (fa, fb) = scheme.face_formula();
    let vertex: Vec<BigRational> = (0..graph.vertex_count()).map(|v| int(va * graph.degree(v) as i64 - vb)).collect();
    let face: Vec<BigRational> = g.faces().iter().map(|f| int(fa * f.degree() as i64 - fb)).collect();
    Ok(ChargeLedger {
        scheme,
        initial_vertex: vertex.clone(),
        initial_face: face.clone(),
        vertex,
        face,
        transfers: Vec::new(),
    })
}

pub fn classify(g: &EmbeddedGraph, scheme: Scheme, big_k: &BigRational) -> Vec<VertexClass> {
    let high_from = big_k + int(scheme.high_offset());
    let graph = g.graph();
    (0..graph.vertex_count())
        .map(|v| {
            let d = graph.degree(v);
            if int(d as i64) >= high_from {
                VertexClass::High
            } else if scheme == Scheme::S41 && d >= 4 {
                VertexClass::Medium
            } else {
                VertexClass::Low
            }
        })
        .collect()
}

/// Incidences of a face: one entry per dart on its boundary walk.
fn incidences(f: &FaceWalk) -> &[VertexId] {
    &f.vertices[..f.darts.len()]
}

/// Initial charges followed by every rule of the scheme, applied rule by
/// rule, each rule over elements in increasing id order.
pub fn apply_rules(g: &EmbeddedGraph, scheme: Scheme, big_k: &BigRational) -> Result<ChargeLedger, DischargingError> {
    let mut ledger = initial_charges(g, scheme)?;
    let class = classify(g, scheme, big_k);
    let graph = g.graph();
    let deg = |v: VertexId| graph.degree(v);
    let high = |v: VertexId| class[v] == VertexClass::High;
    let faces = g.faces();
    let n = graph.vertex_count();

    match scheme {
        Scheme::S34 | Scheme::S35 => {
            let s34 = scheme == Scheme::S34;
            for (i, f) in faces.iter().enumerate() {
                let inc = incidences(f);
                if s34 {
                    let threes = inc.iter().filter(|&&v| deg(v) == 3).count();
                    if threes > 0 {
                        let share = ledger.initial_face[i].clone() / int(threes as i64);
                        for &v in inc.iter().filter(|&&v| deg(v) == 3) {
                            ledger.send("R1", Element::Face(i), Element::Vertex(v), share.clone());
                        }
                    }
                } else if f.degree() >= 4 {
                    for &v in inc.iter().filter(|&&v| deg(v) == 4) {
                        ledger.send("R1", Element::Face(i), Element::Vertex(v), frac(1, 4));
                    }
                }
            }
            let (r2, r3, r4) = if s34 { (frac(13, 14), frac(13, 28), frac(3, 14)) } else { (frac(7, 8), frac(7, 16), frac(1, 4)) };
            for v in (0..n).filter(|&v| high(v)) {
                for &u in graph.neighbors(v) {
                    if !high(u) {
                        ledger.send("R2", Element::Vertex(v), Element::Vertex(u), r2.clone());
                    }
                }
            }
            for v in (0..n).filter(|&v| high(v) && deg(v) >= 3) {
                let rot = g.rotation_neighbors(v);
                let d = rot.len();
                for i in 0..d {
                    if high(rot[i]) {
                        for u in [rot[(i + d - 1) % d], rot[(i + 1) % d]] {
                            ledger.send("R3", Element::Vertex(v), Element::Vertex(u), r3.clone());
                        }
                    }
                }
            }
            for v in (0..n).filter(|&v| !high(v) && deg(v) >= 5) {
                for &u in graph.neighbors(v) {
                    let receives = if s34 { deg(u) <= 4 } else { deg(u) == 4 };
                    if receives {
                        ledger.send("R4", Element::Vertex(v), Element::Vertex(u), r4.clone());
                    }
                }
            }
        }
        Scheme::S41 => {
            for v in (0..n).filter(|&v| high(v)) {
                for &u in graph.neighbors(v) {
                    ledger.send("R1", Element::Vertex(v), Element::Vertex(u), frac(4, 5));
                }
            }
            for v in (0..n).filter(|&v| class[v] == VertexClass::Medium) {
                for &u in graph.neighbors(v).iter().filter(|&&u| deg(u) == 3) {
                    ledger.send("R2", Element::Vertex(v), Element::Vertex(u), frac(1, 5));
                }
            }
            for (i, f) in faces.iter().enumerate().filter(|(_, f)| f.degree() >= 5) {
                for &v in incidences(f).iter().filter(|&&v| deg(v) == 3) {
                    ledger.send("R3", Element::Face(i), Element::Vertex(v), frac(1, 5));
                }
            }
        }
        Scheme::S51 => {
            for v in (0..n).filter(|&v| high(v)) {
                for &u in graph.neighbors(v) {
                    ledger.send("R1", Element::Vertex(v), Element::Vertex(u), int(4));
                }
            }
        }
    }
    ledger.check_conservation()?;
    Ok(ledger)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    pub element: Element,
    pub charge: BigRational,
    pub contradicts: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub scheme: Scheme,
    pub big_k: BigRational,
    pub genus: usize,
    /// The scheme's Euler value `a * g - b`.
    pub expected_total: BigRational,
    pub ledger: ChargeLedger,
    pub classes: Vec<VertexClass>,
    pub face_degrees: Vec<usize>,
    pub flags: Vec<Flag>,
    /// Context the proofs assume but the audit does not enforce.
    pub notes: Vec<String>,
}

impl AuditReport {
    pub fn initial_matches_euler(&self) -> bool {
        self.ledger.initial_total() == self.expected_total
    }
}

pub fn audit(g: &EmbeddedGraph, scheme: Scheme, big_k: &BigRational) -> Result<AuditReport, DischargingError> {
    let genus = g.euler_genus()?;
    let ledger = apply_rules(g, scheme, big_k)?;
    let classes = classify(g, scheme, big_k);
    let faces = g.faces();
    let graph = g.graph();
    let (a, b) = scheme.euler_total();
    let expected_total = int(a * genus as i64 - b);

    let mut flags = Vec::new();
    for (v, c) in ledger.vertex.iter().enumerate() {
        if c.is_negative() {
            let contradicts = if classes[v] == VertexClass::High {
                "high vertices keep enough charge to beat the Euler total".to_string()
            } else {
                "every non-high vertex ends nonnegative".to_string()
            };
            flags.push(Flag { element: Element::Vertex(v), charge: c.clone(), contradicts });
        }
    }
    for (i, c) in ledger.face.iter().enumerate() {
        if c.is_negative() {
            flags.push(Flag { element: Element::Face(i), charge: c.clone(), contradicts: "every face ends nonnegative".into() });
        }
    }

    let mut notes = Vec::new();
    let low_degree: Vec<String> = (0..graph.vertex_count()).filter(|&v| graph.degree(v) <= 2).map(|v| v.to_string()).collect();
    if !low_degree.is_empty() {
        notes.push(format!("vertices of degree at most 2 (absent from minimal counterexamples): {}", low_degree.join(",")));
    }
    match scheme {
        Scheme::S41 if graph.has_triangle() => notes.push("graph has triangles; s41 assumes triangle-free".into()),
        Scheme::S51 if graph.girth().is_some_and(|x| x < 7) => {
            notes.push(format!("girth {} < 7; s51 assumes girth at least 7", graph.girth().unwrap_or(0)))
        }
        Scheme::S34 => {
            for (i, f) in faces.iter().enumerate() {
                let inc = incidences(f);
                let repeated = inc.iter().enumerate().any(|(p, &v)| graph.degree(v) == 3 && inc[..p].contains(&v));
                if repeated {
                    notes.push(format!("f{i}: a 3-vertex appears more than once on the boundary; each appearance gets a share"));
                }
            }
        }
        _ => {}
    }
    let sending_negative = ledger
        .transfers
        .iter()
        .filter(|t| matches!(t.from, Element::Face(_)) && !t.amount.is_positive())
        .count();
    if sending_negative > 0 {
        notes.push(format!("{sending_negative} face transfers carry a nonpositive amount (faces of degree below 3)"));
    }
    if ledger.total() != expected_total {
        return Err(DischargingError::NotConserved(format!(
            "final total {} differs from the Euler value {expected_total}",
            ledger.total()
        )));
    }
    Ok(AuditReport {
        scheme,
        big_k: big_k.clone(),
        genus,
        expected_total,
        classes,
        face_degrees: faces.iter().map(FaceWalk::degree).collect(),
        ledger,
        flags,
        notes,
    })
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = &self.ledger;
        writeln!(f, "scheme {}", self.scheme)?;
        writeln!(f, "K {}", self.big_k)?;
        writeln!(f, "eg {}", self.genus)?;
        writeln!(f, "expected_total {}", self.expected_total)?;
        writeln!(f, "initial_total {}", l.initial_total())?;
        writeln!(f, "final_total {}", l.total())?;
        writeln!(f, "transfers {}", l.transfers.len())?;
        for note in &self.notes {
            writeln!(f, "note {note}")?;
        }
        for (v, class) in self.classes.iter().enumerate() {
            writeln!(f, "vertex {v} {class} initial {} final {}", l.initial_vertex[v], l.vertex[v])?;
        }
        for (i, d) in self.face_degrees.iter().enumerate() {
            writeln!(f, "face {i} degree {d} initial {} final {}", l.initial_face[i], l.face[i])?;
        }
        for t in &l.transfers {
            writeln!(f, "transfer {} {} {} {}", t.rule, t.from, t.to, t.amount)?;
        }
        for flag in &self.flags {
            writeln!(f, "flag {} {} contradicts: {}", flag.element, flag.charge, flag.contradicts)?;
        }
        Ok(())
    }
}
