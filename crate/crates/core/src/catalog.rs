//! Known solution families (Theorem 2, §4.2.1–4.2.3), sign canonicalization
//! and embedding-dimension bounds.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{rat, ExactScalar, MultiPoly};
use crate::geometry::{GeometryError, PotentialKind, ToricPotential};
use crate::ma::{verify_ma_star, MAError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("invalid partition {0:?}: parts must be positive and the list non-empty")]
    InvalidPartition(Vec<usize>),
    #[error("power parameter K must be positive")]
    InvalidPower,
    #[error("P(0) must be ±1, got {0}")]
    Normalization(String),
    #[error("variable x{0} has zero linear coefficient but P is not even in it; no canonical sign")]
    AmbiguousCanonicalForm(usize),
    #[error("embedding bound needs a log potential with positive integral power, got {0}")]
    NotIntegralPower(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    MA(#[from] MAError),
}

/// One Theorem 2 family member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub name: String,
    pub partition: Vec<usize>,
    pub n: usize,
    #[serde(rename = "P")]
    pub p: MultiPoly,
    pub h: usize,
    #[serde(rename = "K")]
    pub k: u32,
    pub potential: ToricPotential,
    pub min_embedding_dim: usize,
    pub manifold_label: String,
}

impl SolutionRecord {
    pub fn new(partition: &[usize], k: u32) -> Result<Self, CatalogError> {
        let p = product_solution(partition)?;
        let potential = potential_for_power(partition, k)?;
        let parts: Vec<String> = partition.iter().map(usize::to_string).collect();
        Ok(SolutionRecord {
            name: format!("product[{}] K={k}", parts.join(",")),
            partition: partition.to_vec(),
            n: partition.iter().sum(),
            p,
            h: block_gcd(partition),
            k,
            min_embedding_dim: min_embedding_dim(&potential)?,
            potential,
            manifold_label: manifold_label(partition),
        })
    }
}

fn check_partition(partition: &[usize]) -> Result<(), CatalogError> {
    if partition.is_empty() || partition.contains(&0) {
        return Err(CatalogError::InvalidPartition(partition.to_vec()));
    }
    Ok(())
}

/// `h = gcd(n_i + 1)`.
pub fn block_gcd(partition: &[usize]) -> usize {
    partition.iter().fold(0, |g, &p| g.gcd(&(p + 1)))
}

/// `1 + (Σ_{j in block} x_j)/(m + 1)` for the block starting at `start`.
fn block_base(n: usize, start: usize, size: usize) -> MultiPoly {
    let w = rat(1, size as i64 + 1);
    (start..start + size).fold(MultiPoly::one(n), |acc, j| acc + MultiPoly::var(n, j).scale(&w))
}

fn block_product(partition: &[usize], exponent: impl Fn(usize) -> u32) -> MultiPoly {
    let n: usize = partition.iter().sum();
    let mut start = 0;
    let mut out = MultiPoly::one(n);
    for &size in partition {
        out = out * block_base(n, start, size).pow(exponent(size));
        start += size;
    }
    out
}

/// `∏_i (1 + (Σ_{block i} x)/(n_i + 1))^{n_i + 1}` over consecutive blocks.
pub fn product_solution(partition: &[usize]) -> Result<MultiPoly, CatalogError> {
    check_partition(partition)?;
    Ok(block_product(partition, |m| m as u32 + 1))
}

/// The diastatic potential `log ∏_i (1 + Σ/(n_i+1))^{K(n_i+1)/h}` of the
/// Theorem 2 metric `(K/h) ⊕ (n_i+1) g_pFS`.
pub fn potential_for_power(partition: &[usize], k: u32) -> Result<ToricPotential, CatalogError> {
    check_partition(partition)?;
    if k == 0 {
        return Err(CatalogError::InvalidPower);
    }
    let h = block_gcd(partition);
    let p = block_product(partition, |m| (k as usize * (m + 1) / h) as u32);
    Ok(ToricPotential::log(p, ExactScalar::one())?)
}

/// Brings `P` to the representative with `P(0) = +1` and non-negative linear
/// coefficients, using `P → −P` and the para-holomorphic flips `x_i → −x_i`.
pub fn canonicalize(p: &MultiPoly) -> Result<MultiPoly, CatalogError> {
    let c0 = p.constant_term();
    if !c0.abs().is_one() {
        return Err(CatalogError::Normalization(c0.to_string()));
    }
    let mut out = if c0.is_negative() { -p } else { p.clone() };
    let n = out.nvars();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        let mut flip = vec![ExactScalar::one(); n];
        flip[i] = -ExactScalar::one();
        let c = out.coeff(&e);
        if c.is_negative() {
            out = out.scale_vars(&flip).map_err(MAError::from)?;
        } else if c.is_zero() && out.scale_vars(&flip).map_err(MAError::from)? != out {
            return Err(CatalogError::AmbiguousCanonicalForm(i));
        }
    }
    Ok(out)
}

/// Canonical representatives of a list of solutions, sorted and deduplicated.
pub fn canonical_classes(polys: &[MultiPoly]) -> Result<Vec<MultiPoly>, CatalogError> {
    let mut out = polys.iter().map(canonicalize).collect::<Result<Vec<_>, _>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// Number of monomials of the expanded `P^k`, minus one (the constant).
pub fn min_embedding_dim(potential: &ToricPotential) -> Result<usize, CatalogError> {
    let k = potential.exponent();
    let bad = || CatalogError::NotIntegralPower(k.to_string());
    if potential.kind() != PotentialKind::Log || !k.is_integer() || !k.is_positive() {
        return Err(bad());
    }
    let power = k.to_integer().to_u32().ok_or_else(bad)?;
    Ok(potential.polynomial().pow(power).len().saturating_sub(1))
}

/// `"DP^1 × DP^2"` for the partition `[1, 2]`.
pub fn manifold_label(partition: &[usize]) -> String {
    partition
        .iter()
        .map(|p| format!("DP^{p}"))
        .collect::<Vec<_>>()
        .join(" × ")
}

/// All compositions (ordered partitions) of `n`.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=n)
        .flat_map(|first| {
            compositions(n - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Integer partitions of `n` in non-increasing order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Whether `P^k` is a Theorem 2 diastasis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ImmersionStatus {
    /// `P` is (up to sign gauge) `product_solution(partition)` and `k = K/h`
    /// with `K` a positive integer.
    Admissible { partition: Vec<usize>, big_k: u32 },
    /// `P` solves Eq. (MA*) but the pair `(P, k)` is outside Theorem 2's
    /// integral families; the paper does not decide admissibility.
    VerifiedNotAsserted,
    /// `P` does not solve Eq. (MA*).
    NotASolution,
}

/// Classifies `P^k` against Theorem 2.
pub fn immersion_status(p: &MultiPoly, k: &ExactScalar, n: usize) -> Result<ImmersionStatus, CatalogError> {
    if !verify_ma_star(p, n)?.is_solution {
        return Ok(ImmersionStatus::NotASolution);
    }
    let Ok(canon) = canonicalize(p) else {
        return Ok(ImmersionStatus::VerifiedNotAsserted);
    };
    for partition in compositions(n) {
        if product_solution(&partition)? != canon {
            continue;
        }
        let hk = k * ExactScalar::from_integer(block_gcd(&partition).into());
        if hk.is_integer() && hk.is_positive() {
            if let Some(big_k) = hk.to_integer().to_u32() {
                return Ok(ImmersionStatus::Admissible { partition, big_k });
            }
        }
    }
    Ok(ImmersionStatus::VerifiedNotAsserted)
}

/// The solutions displayed in the paper, with the sign of Eq. (MA*) each one
/// carries (determined by exact verification; see the acceptance suite).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PublishedSolution {
    pub name: String,
    pub n: usize,
    #[serde(rename = "P")]
    pub p: MultiPoly,
}

/// `(1 ± x/2)²` (§4.2.1), `(1 + x₁/r ± r x₂/9)³` and `(1 + x₁/r)²(1 ± r x₂/4)²`
/// for `r ∈ {1, 2, 3, 9}` (Prop. newmain), and the three `n = 3` products
/// (§4.2.3), each with `ε = ±1`.
pub fn published_solutions() -> Vec<PublishedSolution> {
    let mut out = Vec::new();
    let mut push = |name: String, n: usize, p: MultiPoly| {
        for eps in [1i64, -1] {
            let tag = if eps > 0 { "+" } else { "-" };
            out.push(PublishedSolution {
                name: format!("{tag}{name}"),
                n,
                p: p.scale(&rat(eps, 1)),
            });
        }
    };
    for s in [1i64, -1] {
        let sym = if s > 0 { "+" } else { "-" };
        let x = MultiPoly::var(1, 0);
        push(
            format!("(1{sym}x/2)^2"),
            1,
            (MultiPoly::one(1) + x.scale(&rat(s, 2))).pow(2),
        );
    }
    for r in [1i64, 2, 3, 9] {
        for s in [1i64, -1] {
            let sym = if s > 0 { "+" } else { "-" };
            let x1 = MultiPoly::var(2, 0).scale(&rat(1, r));
            let x2 = MultiPoly::var(2, 1);
            push(
                format!("(1+x1/{r}{sym}{r}x2/9)^3"),
                2,
                (MultiPoly::one(2) + &x1 + x2.scale(&rat(s * r, 9))).pow(3),
            );
            push(
                format!("(1+x1/{r})^2(1{sym}{r}x2/4)^2"),
                2,
                (MultiPoly::one(2) + &x1).pow(2) * (MultiPoly::one(2) + x2.scale(&rat(s * r, 4))).pow(2),
            );
        }
    }
    for partition in [[1usize, 1, 1].as_slice(), &[1, 2], &[3]] {
        let parts: Vec<String> = partition.iter().map(usize::to_string).collect();
        push(
            format!("product[{}]", parts.join(",")),
            3,
            product_solution(partition).expect("valid partition"),
        );
    }
    out
}

/// Persists records as a JSON array.
pub fn catalog_to_json(records: &[SolutionRecord]) -> String {
    serde_json::to_string_pretty(records).expect("records are always serializable")
}

pub fn catalog_from_json(s: &str) -> Result<Vec<SolutionRecord>, serde_json::Error> {
    serde_json::from_str(s)
}
