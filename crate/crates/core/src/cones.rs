//! Cycle classes with an integer intersection pairing, and the cones they
//! span.
//!
//! On a spherical variety the effective cone of codimension-`k` cycles is
//! generated by the closures of `B`-orbits, and the nef cone is its dual
//! under the pairing with codimension-`(N-k)` classes. The diagonal is nef
//! exactly when no two orbit closures of complementary dimension meet
//! negatively, which is what [`spherical_nef_diagonal_check`] tests.
//!
//! Pairings come from a [`CycleDataset`], a small JSON document:
//!
//! ```json
//! { "variety": "...", "dimension": 5,
//!   "classes":  [{ "label": "tau(2,0)", "partition": [2, 0], "codim": 2 }, ...],
//!   "pairings": [{ "a": "tau(2,0)", "b": "tau(3,0)", "value": 0 }, ...] }
//! ```

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::ExactInt;
use crate::verdict::{Reason, Verdict};

const GW2C5: &str = include_str!("../data/gw2c5.json");
const G2C5: &str = include_str!("../data/g2c5.json");

/// A Schubert (or `B`-orbit closure) class, indexed by a two-part partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SchubertClass {
    pub label: String,
    pub partition: (i64, i64),
    pub codim: u32,
}

impl SchubertClass {
    pub fn new(label: impl Into<String>, partition: (i64, i64)) -> Result<Self> {
        let codim = partition.0 + partition.1;
        if codim < 0 {
            return Err(Error::InvalidPartition(partition.0, partition.1));
        }
        Ok(Self { label: label.into(), partition, codim: codim as u32 })
    }

    /// `tau(a,b)`.
    pub fn tau(a: i64, b: i64) -> Result<Self> {
        Self::new(format!("tau({a},{b})"), (a, b))
    }

    /// Whether the partition indexes a Schubert class of the odd symplectic
    /// Grassmannian of lines in `C^(2n+1)`: an `(n-2)`-strict partition
    /// `2n-1 >= l1 >= l2 >= 0`, or the extra class `(2n-1, -1)`.
    pub fn is_odd_symplectic_line_class(&self, n: i64) -> bool {
        let (l1, l2) = self.partition;
        if (l1, l2) == (2 * n - 1, -1) {
            return true;
        }
        let strict = n - 2;
        (0..=2 * n - 1).contains(&l1) && (0..=l1).contains(&l2) && (l1 <= strict || l1 > l2)
    }
}

/// The Schubert classes of `G_w(2, C^(2n+1))`, ordered by codimension.
pub fn odd_symplectic_line_classes(n: u32) -> Result<Vec<SchubertClass>> {
    if n < 2 {
        return Err(Error::InvalidInput("odd symplectic Grassmannian needs n >= 2".into()));
    }
    let n = n as i64;
    let mut classes = Vec::new();
    for l1 in 0..=2 * n - 1 {
        for l2 in 0..=l1 {
            let class = SchubertClass::tau(l1, l2)?;
            if class.is_odd_symplectic_line_class(n) {
                classes.push(class);
            }
        }
    }
    classes.push(SchubertClass::tau(2 * n - 1, -1)?);
    classes.sort_by_key(|c| (c.codim, c.partition));
    Ok(classes)
}

/// `deg(tau(a,b) . tau(2n-1,-1)) = (-1)^(a-1)` for `a >= b >= 0`,
/// `a + b = 2n - 1`.
pub fn tau_top_pairing(n: u32, a: i64, b: i64) -> Result<ExactInt> {
    if n < 2 || b < 0 || a < b || a + b != 2 * n as i64 - 1 {
        return Err(Error::InvalidPartition(a, b));
    }
    Ok(if (a - 1).is_even() { BigInt::one() } else { -BigInt::one() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pairing {
    pub a: String,
    pub b: String,
    pub value: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDataset {
    variety: String,
    dimension: u32,
    classes: Vec<SchubertClass>,
    pairings: Vec<Pairing>,
}

/// Validated cycle classes and their intersection numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDataset {
    variety: String,
    dimension: u32,
    classes: Vec<SchubertClass>,
    pairings: Vec<Pairing>,
    index: HashMap<String, usize>,
    values: HashMap<(usize, usize), ExactInt>,
}

fn ordered(i: usize, j: usize) -> (usize, usize) {
    if i <= j {
        (i, j)
    } else {
        (j, i)
    }
}

/// Parses and validates a dataset document.
pub fn load_dataset(document: &str) -> Result<CycleDataset> {
    let raw: RawDataset =
        serde_json::from_str(document).map_err(|e| Error::SchemaError(e.to_string()))?;
    CycleDataset::from_raw(raw)
}

impl CycleDataset {
    fn from_raw(raw: RawDataset) -> Result<Self> {
        if raw.classes.is_empty() {
            return Err(Error::SchemaError("dataset has no classes".into()));
        }
        let mut index = HashMap::new();
        for (i, class) in raw.classes.iter().enumerate() {
            let (l1, l2) = class.partition;
            if l1 + l2 != class.codim as i64 {
                return Err(Error::SchemaError(format!(
                    "{}: codim {} does not match partition ({l1},{l2})",
                    class.label, class.codim
                )));
            }
            if class.codim > raw.dimension {
                return Err(Error::SchemaError(format!(
                    "{}: codim {} exceeds dimension {}",
                    class.label, class.codim, raw.dimension
                )));
            }
            if index.insert(class.label.clone(), i).is_some() {
                return Err(Error::SchemaError(format!("duplicate label {}", class.label)));
            }
        }
        let mut values = HashMap::new();
        for p in &raw.pairings {
            let lookup = |label: &str| {
                index
                    .get(label)
                    .copied()
                    .ok_or_else(|| Error::SchemaError(format!("unknown class {label}")))
            };
            let (i, j) = (lookup(&p.a)?, lookup(&p.b)?);
            let codims = raw.classes[i].codim + raw.classes[j].codim;
            if codims != raw.dimension {
                return Err(Error::InconsistentPairing {
                    a: p.a.clone(),
                    b: p.b.clone(),
                    detail: format!("codimensions add up to {codims}, not {}", raw.dimension),
                });
            }
            let value = BigInt::from(p.value);
            if let Some(previous) = values.insert(ordered(i, j), value.clone()) {
                if previous != value {
                    return Err(Error::InconsistentPairing {
                        a: p.a.clone(),
                        b: p.b.clone(),
                        detail: format!("listed as both {previous} and {value}"),
                    });
                }
            }
        }
        Ok(Self {
            variety: raw.variety,
            dimension: raw.dimension,
            classes: raw.classes,
            pairings: raw.pairings,
            index,
            values,
        })
    }

    /// Odd symplectic Grassmannian `G_w(2, C^5)`, the del Pezzo 5-fold of
    /// degree 5.
    pub fn odd_symplectic_g2c5() -> Self {
        load_dataset(GW2C5).expect("embedded gw2c5.json is valid")
    }

    /// The homogeneous Grassmannian `G(2, C^5)`.
    pub fn grassmannian_g2c5() -> Self {
        load_dataset(G2C5).expect("embedded g2c5.json is valid")
    }

    /// Shipped datasets by file name.
    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "gw2c5.json" | "gw2c5" => Some(Self::odd_symplectic_g2c5()),
            "g2c5.json" | "g2c5" => Some(Self::grassmannian_g2c5()),
            _ => None,
        }
    }

    pub fn variety(&self) -> &str {
        &self.variety
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn classes(&self) -> &[SchubertClass] {
        &self.classes
    }

    pub fn pairings(&self) -> &[Pairing] {
        &self.pairings
    }

    pub fn class(&self, label: &str) -> Option<&SchubertClass> {
        self.index.get(label).map(|&i| &self.classes[i])
    }

    /// Classes of codimension `k`, in dataset order.
    pub fn classes_of_codim(&self, k: u32) -> Vec<&SchubertClass> {
        self.classes.iter().filter(|c| c.codim == k).collect()
    }

    /// Intersection number of two classes of complementary codimension.
    pub fn pair(&self, a: &str, b: &str) -> Result<ExactInt> {
        let unknown = |label: &str| Error::InvalidInput(format!("unknown class {label}"));
        let i = *self.index.get(a).ok_or_else(|| unknown(a))?;
        let j = *self.index.get(b).ok_or_else(|| unknown(b))?;
        let codims = self.classes[i].codim + self.classes[j].codim;
        if codims != self.dimension {
            return Err(Error::DimensionMismatch(format!(
                "{a} and {b} have codimensions adding to {codims}, not {}",
                self.dimension
            )));
        }
        self.values
            .get(&ordered(i, j))
            .cloned()
            .ok_or_else(|| Error::MissingPairing { a: a.into(), b: b.into() })
    }

    pub fn to_json(&self) -> String {
        let raw = RawDataset {
            variety: self.variety.clone(),
            dimension: self.dimension,
            classes: self.classes.clone(),
            pairings: self.pairings.clone(),
        };
        serde_json::to_string_pretty(&raw).expect("dataset serializes")
    }
}

/// A pointed polyhedral cone given by its extreme rays, each a primitive
/// integer vector. Rays are kept sorted so equal cones compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalCone {
    ambient: usize,
    generators: Vec<Vec<ExactInt>>,
}

/// Divides out the gcd of the entries; orientation is preserved.
pub fn primitive(v: &[ExactInt]) -> Vec<ExactInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

fn dot(a: &[ExactInt], b: &[ExactInt]) -> ExactInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn rank(rows: &[Vec<ExactInt>], width: usize) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for i in 0..m.len() {
            if i != rank && !m[i][col].is_zero() {
                let factor = &m[i][col] / &m[rank][col];
                for k in col..width {
                    let delta = &factor * &m[rank][k];
                    m[i][k] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Exact inverse of a square integer matrix, `None` if singular.
fn inverse(rows: &[Vec<ExactInt>]) -> Option<Vec<Vec<BigRational>>> {
    let d = rows.len();
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<BigRational> =
                r.iter().map(|x| BigRational::from_integer(x.clone())).collect();
            row.extend((0..d).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for col in 0..d {
        let pivot = (col..d).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &p;
        }
        for i in 0..d {
            if i != col && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                for k in 0..2 * d {
                    let delta = &factor * &m[col][k];
                    m[i][k] -= delta;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[d..].to_vec()).collect())
}

fn integral_primitive(v: &[BigRational]) -> Vec<ExactInt> {
    let lcm = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let scaled: Vec<ExactInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    primitive(&scaled)
}

impl RationalCone {
    /// Wraps a list of extreme rays after primitive normalization. The
    /// caller vouches that the rays are extreme.
    fn from_extreme_rays(ambient: usize, rays: Vec<Vec<ExactInt>>) -> Self {
        let mut generators: Vec<Vec<ExactInt>> = rays.iter().map(|r| primitive(r)).collect();
        generators.sort();
        generators.dedup();
        Self { ambient, generators }
    }

    /// The cone spanned by arbitrary generators, reduced to its extreme rays.
    /// The generators must span a full-dimensional pointed cone.
    pub fn generated_by(ambient: usize, generators: &[Vec<ExactInt>]) -> Result<Self> {
        let facets = dual_cone(generators, &identity(ambient))?;
        dual_cone(&facets.generators, &identity(ambient))
    }

    /// The positive orthant, spanned by the standard basis.
    pub fn orthant(ambient: usize) -> Self {
        Self::from_extreme_rays(ambient, identity(ambient))
    }

    pub fn ambient_dimension(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &[Vec<ExactInt>] {
        &self.generators
    }

    /// Membership test through the facet description.
    pub fn contains(&self, v: &[ExactInt]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in a cone of dimension {}",
                v.len(),
                self.ambient
            )));
        }
        let facets = dual_cone(&self.generators, &identity(self.ambient))?;
        Ok(facets.generators.iter().all(|f| !dot(f, v).is_negative()))
    }

    pub fn is_subcone_of(&self, other: &Self) -> Result<bool> {
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for RationalCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rays: Vec<String> = self
            .generators
            .iter()
            .map(|g| {
                let entries: Vec<String> = g.iter().map(ToString::to_string).collect();
                format!("({})", entries.join(","))
            })
            .collect();
        write!(f, "cone[{}]", rays.join(", "))
    }
}

pub fn identity(d: usize) -> Vec<Vec<ExactInt>> {
    (0..d)
        .map(|i| (0..d).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// Constraint normals `M g`, one per effective generator, zeros dropped.
fn constraint_normals(
    effective_generators: &[Vec<ExactInt>],
    pairing_matrix: &[Vec<ExactInt>],
) -> Result<(usize, Vec<Vec<ExactInt>>)> {
    let target = pairing_matrix.len();
    if target == 0 {
        return Err(Error::DimensionMismatch("empty pairing matrix".into()));
    }
    let source = pairing_matrix[0].len();
    if pairing_matrix.iter().any(|row| row.len() != source) {
        return Err(Error::DimensionMismatch("ragged pairing matrix".into()));
    }
    let mut normals = Vec::new();
    for g in effective_generators {
        if g.len() != source {
            return Err(Error::DimensionMismatch(format!(
                "generator of length {} against a pairing with {} columns",
                g.len(),
                source
            )));
        }
        let n: Vec<ExactInt> = pairing_matrix.iter().map(|row| dot(row, g)).collect();
        if n.iter().any(|x| !x.is_zero()) {
            normals.push(primitive(&n));
        }
    }
    if rank(&normals, target) < target {
        return Err(Error::InvalidInput(
            "effective generators do not span after pairing; the dual cone contains a line".into(),
        ));
    }
    Ok((target, normals))
}

fn check_full_dimensional(cone: RationalCone) -> Result<RationalCone> {
    if rank(&cone.generators, cone.ambient) < cone.ambient {
        return Err(Error::EmptyInterior(format!(
            "{} extreme rays span less than dimension {}",
            cone.generators.len(),
            cone.ambient
        )));
    }
    Ok(cone)
}

/// `{ x : <x, M g> >= 0 for every effective generator g }`, as a minimal
/// set of primitive generators.
///
/// `pairing_matrix[i][j]` is the intersection number of the `i`-th class of
/// the result's basis with the `j`-th class of the effective generators'
/// basis. Two-dimensional duals are computed by rotating the boundary
/// normals, higher ones by double description.
pub fn dual_cone(
    effective_generators: &[Vec<ExactInt>],
    pairing_matrix: &[Vec<ExactInt>],
) -> Result<RationalCone> {
    if pairing_matrix.len() == 2 {
        dual_cone_by_rotation(effective_generators, pairing_matrix)
    } else {
        dual_cone_by_double_description(effective_generators, pairing_matrix)
    }
}

/// Two-dimensional dual: every extreme ray lies on some boundary line
/// `<n, x> = 0`, so it is one of the two rotations of a normal `n` by a
/// quarter turn, and it survives iff it satisfies every constraint.
pub fn dual_cone_by_rotation(
    effective_generators: &[Vec<ExactInt>],
    pairing_matrix: &[Vec<ExactInt>],
) -> Result<RationalCone> {
    let (target, normals) = constraint_normals(effective_generators, pairing_matrix)?;
    if target != 2 {
        return Err(Error::DimensionMismatch(format!("rotation needs 2 dimensions, got {target}")));
    }
    let mut rays = Vec::new();
    for n in &normals {
        let left = vec![-n[1].clone(), n[0].clone()];
        let right = vec![n[1].clone(), -n[0].clone()];
        for candidate in [left, right] {
            if normals.iter().all(|m| !dot(m, &candidate).is_negative()) {
                rays.push(candidate);
            }
        }
    }
    check_full_dimensional(RationalCone::from_extreme_rays(2, rays))
}

/// Double description: start from the simplicial cone cut out by `d`
/// independent constraints, then add the remaining constraints one at a time,
/// keeping rays on the feasible side and combining adjacent pairs that
/// straddle the new hyperplane.
pub fn dual_cone_by_double_description(
    effective_generators: &[Vec<ExactInt>],
    pairing_matrix: &[Vec<ExactInt>],
) -> Result<RationalCone> {
    let (d, normals) = constraint_normals(effective_generators, pairing_matrix)?;

    // greedily pick d independent rows for the starting simplex
    let mut basis: Vec<usize> = Vec::with_capacity(d);
    for (i, n) in normals.iter().enumerate() {
        let mut trial: Vec<Vec<ExactInt>> = basis.iter().map(|&j| normals[j].clone()).collect();
        trial.push(n.clone());
        if rank(&trial, d) == trial.len() {
            basis.push(i);
            if basis.len() == d {
                break;
            }
        }
    }
    let basis_rows: Vec<Vec<ExactInt>> = basis.iter().map(|&j| normals[j].clone()).collect();
    let inv = inverse(&basis_rows).expect("basis rows are independent");

    // columns of the inverse are the rays of { x : B x >= 0 }
    let mut rays: Vec<Vec<ExactInt>> = (0..d)
        .map(|c| integral_primitive(&inv.iter().map(|row| row[c].clone()).collect::<Vec<_>>()))
        .collect();
    let mut processed: Vec<usize> = basis.clone();

    for (i, a) in normals.iter().enumerate() {
        if basis.contains(&i) {
            continue;
        }
        let values: Vec<ExactInt> = rays.iter().map(|r| dot(a, r)).collect();
        let zero_sets: Vec<Vec<usize>> = rays
            .iter()
            .map(|r| processed.iter().copied().filter(|&k| dot(&normals[k], r).is_zero()).collect())
            .collect();

        let mut next: Vec<Vec<ExactInt>> = Vec::new();
        let positive: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_positive()).collect();
        let negative: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_negative()).collect();
        for k in 0..rays.len() {
            if !values[k].is_negative() {
                next.push(rays[k].clone());
            }
        }
        for &p in &positive {
            for &q in &negative {
                let common: Vec<usize> =
                    zero_sets[p].iter().copied().filter(|k| zero_sets[q].contains(k)).collect();
                if common.len() + 2 < d {
                    continue;
                }
                let adjacent = (0..rays.len()).all(|o| {
                    o == p || o == q || !common.iter().all(|k| zero_sets[o].contains(k))
                });
                if !adjacent {
                    continue;
                }
                let combined: Vec<ExactInt> = rays[q]
                    .iter()
                    .zip(&rays[p])
                    .map(|(xq, xp)| &values[p] * xq - &values[q] * xp)
                    .collect();
                next.push(primitive(&combined));
            }
        }
        rays = next;
        processed.push(i);
    }

    check_full_dimensional(RationalCone::from_extreme_rays(d, rays))
}

/// Effective and nef cones of codimension-`k` cycles, in the basis of the
/// dataset's codimension-`k` classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodimCones {
    pub codim: u32,
    pub basis: Vec<String>,
    pub effective: RationalCone,
    pub nef: RationalCone,
}

impl CodimCones {
    /// Renders a generator as a combination of basis labels, e.g.
    /// `tau(2,0)+tau(3,-1)`.
    pub fn describe(&self, generator: &[ExactInt]) -> String {
        combination(&self.basis, generator)
    }
}

pub fn combination(basis: &[String], coefficients: &[ExactInt]) -> String {
    let mut out = String::new();
    for (label, c) in basis.iter().zip(coefficients) {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let a = c.abs();
        if !a.is_one() {
            out.push_str(&format!("{a}*"));
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Cones of codimension-`k` cycles on a dataset whose classes generate the
/// effective cones (true for spherical varieties).
pub fn codim_cones(ds: &CycleDataset, k: u32) -> Result<CodimCones> {
    if k > ds.dimension() {
        return Err(Error::InvalidInput(format!(
            "codimension {k} exceeds dimension {}",
            ds.dimension()
        )));
    }
    let here = ds.classes_of_codim(k);
    let there = ds.classes_of_codim(ds.dimension() - k);
    if here.is_empty() || there.is_empty() {
        return Err(Error::InvalidInput(format!("no classes of codimension {k} or its complement")));
    }
    let matrix = here
        .iter()
        .map(|a| there.iter().map(|b| ds.pair(&a.label, &b.label)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let nef = dual_cone(&identity(there.len()), &matrix)?;
    Ok(CodimCones {
        codim: k,
        basis: here.iter().map(|c| c.label.clone()).collect(),
        effective: RationalCone::orthant(here.len()),
        nef,
    })
}

/// The nef-diagonal test for spherical varieties: every pair of orbit
/// closures of complementary dimension must meet non-negatively. Reports
/// the first negative pair in dataset order.
pub fn spherical_nef_diagonal_check(ds: &CycleDataset) -> Result<Verdict> {
    let classes = ds.classes();
    for (i, a) in classes.iter().enumerate() {
        for b in &classes[i..] {
            if a.codim + b.codim != ds.dimension() {
                continue;
            }
            let value = ds.pair(&a.label, &b.label)?;
            if value.is_negative() {
                let detail = format!("{} . {} = {} on {}", a.label, b.label, value, ds.variety());
                return Ok(Verdict::not_nef(
                    Reason::NegativeEffectivePair { a: a.label.clone(), b: b.label.clone(), value },
                    detail,
                ));
            }
        }
    }
    Ok(Verdict::nef(
        Reason::Homogeneous,
        format!("all orbit-closure pairings on {} are non-negative", ds.variety()),
    ))
}

/// Nef and pseudoeffective cones of codimension 2 and 3 on the del Pezzo
/// 5-fold of degree 5.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelPezzo5Cones {
    pub codim2: CodimCones,
    pub codim3: CodimCones,
}

pub fn delpezzo5_cones() -> DelPezzo5Cones {
    let ds = CycleDataset::odd_symplectic_g2c5();
    DelPezzo5Cones {
        codim2: codim_cones(&ds, 2).expect("codimension 2 cones of gw2c5"),
        codim3: codim_cones(&ds, 3).expect("codimension 3 cones of gw2c5"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<ExactInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn m(rows: &[&[i64]]) -> Vec<Vec<ExactInt>> {
        rows.iter().map(|r| v(r)).collect()
    }

    #[test]
    fn shipped_dataset_loads() {
        let ds = CycleDataset::odd_symplectic_g2c5();
        assert_eq!(ds.classes().len(), 8);
        assert_eq!(ds.dimension(), 5);
        let codims: Vec<u32> = ds.classes().iter().map(|c| c.codim).collect();
        assert_eq!(codims, vec![0, 1, 2, 2, 3, 3, 4, 5]);
    }

    #[test]
    fn pairing_lookups() {
        let ds = CycleDataset::odd_symplectic_g2c5();
        assert_eq!(ds.pair("tau(3,-1)", "tau(2,1)").unwrap(), BigInt::from(-1));
        assert_eq!(ds.pair("tau(2,1)", "tau(3,-1)").unwrap(), BigInt::from(-1));
        assert_eq!(ds.pair("tau(2,0)", "tau(3,0)").unwrap(), BigInt::from(0));
        assert_eq!(ds.pair("tau(0,0)", "tau(3,2)").unwrap(), BigInt::from(1));
        assert!(matches!(ds.pair("tau(2,0)", "tau(2,0)"), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn missing_pairing_is_reported() {
        let doc = r#"{"variety":"x","dimension":2,
            "classes":[{"label":"a","partition":[1,0],"codim":1},{"label":"b","partition":[1,0],"codim":1}],
            "pairings":[{"a":"a","b":"b","value":1}]}"#;
        let ds = load_dataset(doc).unwrap();
        assert_eq!(
            ds.pair("a", "a"),
            Err(Error::MissingPairing { a: "a".into(), b: "a".into() })
        );
        assert!(matches!(spherical_nef_diagonal_check(&ds), Err(Error::MissingPairing { .. })));
    }

    #[test]
    fn schema_errors() {
        let empty = r#"{"variety":"x","dimension":1,"classes":[],"pairings":[]}"#;
        assert!(matches!(load_dataset(empty), Err(Error::SchemaError(_))));
        assert!(matches!(load_dataset("{"), Err(Error::SchemaError(_))));
        let bad_codim = r#"{"variety":"x","dimension":1,
            "classes":[{"label":"a","partition":[1,0],"codim":0}],"pairings":[]}"#;
        assert!(matches!(load_dataset(bad_codim), Err(Error::SchemaError(_))));
        let unknown = r#"{"variety":"x","dimension":0,
            "classes":[{"label":"a","partition":[0,0],"codim":0}],
            "pairings":[{"a":"a","b":"z","value":1}]}"#;
        assert!(matches!(load_dataset(unknown), Err(Error::SchemaError(_))));
    }

    #[test]
    fn conflicting_duplicate_is_inconsistent() {
        let doc = r#"{"variety":"x","dimension":2,
            "classes":[{"label":"a","partition":[1,0],"codim":1},{"label":"b","partition":[1,0],"codim":1}],
            "pairings":[{"a":"a","b":"b","value":1},{"a":"b","b":"a","value":2}]}"#;
        assert!(matches!(load_dataset(doc), Err(Error::InconsistentPairing { .. })));
        let wrong_dim = r#"{"variety":"x","dimension":3,
            "classes":[{"label":"a","partition":[1,0],"codim":1}],
            "pairings":[{"a":"a","b":"a","value":1}]}"#;
        assert!(matches!(load_dataset(wrong_dim), Err(Error::InconsistentPairing { .. })));
    }

    #[test]
    fn inventory_matches_dataset() {
        let classes = odd_symplectic_line_classes(2).unwrap();
        let mut labels: Vec<&str> = classes.iter().map(|c| c.label.as_str()).collect();
        let ds = CycleDataset::odd_symplectic_g2c5();
        let mut shipped: Vec<&str> = ds.classes().iter().map(|c| c.label.as_str()).collect();
        labels.sort();
        shipped.sort();
        assert_eq!(labels, shipped);
        let codims: Vec<u32> = classes.iter().map(|c| c.codim).collect();
        assert_eq!(codims, vec![0, 1, 2, 2, 3, 3, 4, 5]);
        // top class sits in codimension dim = 4n - 3
        for n in 2..6 {
            let classes = odd_symplectic_line_classes(n).unwrap();
            assert_eq!(classes.last().unwrap().codim, 4 * n - 3);
            assert_eq!(classes.iter().filter(|c| c.codim == 4 * n - 3).count(), 1);
        }
    }

    #[test]
    fn top_pairing_formula() {
        assert_eq!(tau_top_pairing(2, 2, 1).unwrap(), BigInt::from(-1));
        assert_eq!(tau_top_pairing(2, 3, 0).unwrap(), BigInt::from(1));
        assert_eq!(tau_top_pairing(3, 5, 0).unwrap(), BigInt::from(1));
        assert_eq!(tau_top_pairing(3, 2, 3), Err(Error::InvalidPartition(2, 3)));
        assert_eq!(tau_top_pairing(3, 4, 0), Err(Error::InvalidPartition(4, 0)));
    }

    #[test]
    fn top_pairing_agrees_with_dataset() {
        let ds = CycleDataset::odd_symplectic_g2c5();
        for class in ds.classes_of_codim(3) {
            let (a, b) = class.partition;
            assert_eq!(ds.pair("tau(3,-1)", &class.label).unwrap(), tau_top_pairing(2, a, b).unwrap());
        }
    }

    #[test]
    fn dual_cone_examples() {
        let pairing = m(&[&[0, 1], &[1, -1]]);
        let nef = dual_cone(&identity(2), &pairing).unwrap();
        assert_eq!(nef.generators(), &[v(&[1, 0]), v(&[1, 1])]);

        let orthant = dual_cone(&identity(3), &identity(3)).unwrap();
        assert_eq!(orthant, RationalCone::orthant(3));

        let transposed = m(&[&[0, 1], &[1, -1]]);
        let nef3 = dual_cone(&identity(2), &transposed).unwrap();
        assert_eq!(nef3.generators(), &[v(&[1, 0]), v(&[1, 1])]);
    }

    #[test]
    fn degenerate_inputs() {
        // the effective cone is a line: the dual is a ray
        let line = vec![v(&[1, 0]), v(&[-1, 0]), v(&[0, 1])];
        assert!(matches!(dual_cone(&line, &identity(2)), Err(Error::EmptyInterior(_))));
        assert!(matches!(
            dual_cone_by_double_description(&line, &identity(2)),
            Err(Error::EmptyInterior(_))
        ));
        // generators that do not span
        let ray = vec![v(&[1, 0, 0]), v(&[2, 0, 0])];
        assert!(matches!(dual_cone(&ray, &identity(3)), Err(Error::InvalidInput(_))));
        let short = vec![v(&[1, 0])];
        assert!(matches!(dual_cone(&short, &identity(3)), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn double_description_on_a_square_pyramid() {
        // cone over the square with corners (+-1, +-1, 1)
        let gens = vec![v(&[1, 1, 1]), v(&[1, -1, 1]), v(&[-1, 1, 1]), v(&[-1, -1, 1]), v(&[0, 0, 1])];
        let dual = dual_cone(&gens, &identity(3)).unwrap();
        assert_eq!(
            dual.generators(),
            &[v(&[-1, 0, 1]), v(&[0, -1, 1]), v(&[0, 1, 1]), v(&[1, 0, 1])]
        );
        let back = dual_cone(dual.generators(), &identity(3)).unwrap();
        assert_eq!(back.generators().len(), 4);
        assert!(!back.generators().contains(&v(&[0, 0, 1])));
    }

    #[test]
    fn double_description_in_four_dimensions() {
        // cone over a cube: 8 rays, the dual is the cone over an octahedron
        let mut gens = Vec::new();
        for s in 0..8 {
            let sign = |bit: i64| if s & (1 << bit) != 0 { -1 } else { 1 };
            gens.push(v(&[sign(0), sign(1), sign(2), 1]));
        }
        let dual = dual_cone(&gens, &identity(4)).unwrap();
        assert_eq!(dual.generators().len(), 6);
        let back = dual_cone(dual.generators(), &identity(4)).unwrap();
        let mut expected: Vec<Vec<ExactInt>> = gens.clone();
        expected.sort();
        assert_eq!(back.generators(), expected.as_slice());
    }

    #[test]
    fn rotation_matches_double_description() {
        let cases = [
            m(&[&[1, 0], &[1, 1], &[0, 1]]),
            m(&[&[2, -1], &[-1, 3]]),
            m(&[&[3, 1], &[1, 3], &[2, 2], &[5, -1]]),
        ];
        for gens in cases {
            let a = dual_cone_by_rotation(&gens, &identity(2)).unwrap();
            let b = dual_cone_by_double_description(&gens, &identity(2)).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn containment() {
        let cones = delpezzo5_cones();
        assert!(cones.codim2.nef.is_subcone_of(&cones.codim2.effective).unwrap());
        assert!(!cones.codim2.effective.is_subcone_of(&cones.codim2.nef).unwrap());
        assert!(cones.codim2.effective.contains(&v(&[0, 1])).unwrap());
        assert!(!cones.codim2.nef.contains(&v(&[0, 1])).unwrap());
    }

    #[test]
    fn combination_rendering() {
        let basis = vec!["x".to_string(), "y".to_string()];
        assert_eq!(combination(&basis, &v(&[1, 1])), "x+y");
        assert_eq!(combination(&basis, &v(&[2, -1])), "2*x-y");
        assert_eq!(combination(&basis, &v(&[0, 0])), "0");
    }

    #[test]
    fn spherical_check_on_shipped_data() {
        let verdict = spherical_nef_diagonal_check(&CycleDataset::odd_symplectic_g2c5()).unwrap();
        assert_eq!(
            verdict.reason,
            Reason::NegativeEffectivePair {
                a: "tau(3,-1)".into(),
                b: "tau(2,1)".into(),
                value: BigInt::from(-1)
            }
        );
        let verdict = spherical_nef_diagonal_check(&CycleDataset::grassmannian_g2c5()).unwrap();
        assert_eq!(verdict.status, crate::verdict::Status::Nef);
    }

    #[test]
    fn all_positive_dataset_is_nef() {
        let doc = r#"{"variety":"toy","dimension":2,
            "classes":[{"label":"a","partition":[1,0],"codim":1},{"label":"b","partition":[1,0],"codim":1},
                       {"label":"o","partition":[0,0],"codim":0},{"label":"p","partition":[1,1],"codim":2}],
            "pairings":[{"a":"a","b":"a","value":1},{"a":"a","b":"b","value":1},{"a":"b","b":"b","value":1},
                        {"a":"o","b":"p","value":1}]}"#;
        let ds = load_dataset(doc).unwrap();
        assert_eq!(spherical_nef_diagonal_check(&ds).unwrap().status, crate::verdict::Status::Nef);
    }

    #[test]
    fn json_round_trip() {
        let ds = CycleDataset::odd_symplectic_g2c5();
        assert_eq!(load_dataset(&ds.to_json()).unwrap(), ds);
    }
}
