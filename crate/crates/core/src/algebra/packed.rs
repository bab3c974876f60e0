//! Packed integer kernels: polynomial products and a division-free
//! determinant by Laplace expansion over column subsets.
//!
//! Inputs are cleared of denominators (each row, or each factor, is scaled by
//! the lcm of its denominators) and monomials become mixed-radix indices into
//! a dense accumulator, so a monomial product is an index addition. The integer
//! computation runs in `i128` when an a-priori coefficient bound allows it,
//! otherwise modulo several primes near 2⁶² with Chinese-remainder
//! reconstruction against the same bound. Either way the result is exact; the
//! rational rescaling happens once at the end.
//!
//! The determinant accumulates `det(rows < k, cols T)` for every column subset
//! `T`, expanding along row `k` from the minors of the previous rows, so no
//! intermediate division (and no intermediate GCD) is ever taken.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rustc_hash::FxHashMap;

use super::{ExactScalar, MultiPoly, PolyMatrix};

/// Largest dense accumulator, in slots.
const MAX_DENSE: usize = 1 << 21;
/// `i128` is used when the coefficient bound has at most this many bits.
const WORD_BITS: u64 = 125;

type Sparse<C> = Vec<(usize, C)>;
type IntTerms = Vec<(usize, BigInt)>;

/// Coefficient arithmetic for one pass of a kernel.
trait Ring {
    type C: Copy + Default;
    fn embed(&self, b: &BigInt) -> Self::C;
    fn one(&self) -> Self::C;
    fn is_zero(&self, c: &Self::C) -> bool;
    /// `acc ± a·b`.
    fn mul_acc(&self, acc: &mut Self::C, a: Self::C, b: Self::C, negative: bool);
}

/// Plain `i128`; callers guarantee via the coefficient bound that no
/// intermediate value overflows.
struct Word;

impl Ring for Word {
    type C = i128;
    fn embed(&self, b: &BigInt) -> i128 {
        b.to_i128().expect("bounded by the coefficient bound")
    }
    fn one(&self) -> i128 {
        1
    }
    fn is_zero(&self, c: &i128) -> bool {
        *c == 0
    }
    fn mul_acc(&self, acc: &mut i128, a: i128, b: i128, negative: bool) {
        if negative {
            *acc -= a * b;
        } else {
            *acc += a * b;
        }
    }
}

/// Integers modulo an odd prime `p < 2⁶²`, held in Montgomery form
/// (`x·2⁶⁴ mod p`) so multiplication needs no division.
struct Modular {
    p: u64,
    /// `−p⁻¹ mod 2⁶⁴`.
    neg_inv: u64,
    /// `2¹²⁸ mod p`, for conversion into Montgomery form.
    r2: u64,
}

impl Modular {
    fn new(p: u64) -> Self {
        // Newton iteration for p⁻¹ mod 2⁶⁴ (each step doubles the correct bits).
        let mut inv: u64 = 1;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        let r = (1u128 << 64) % u128::from(p);
        let r2 = ((r * r) % u128::from(p)) as u64;
        Modular {
            p,
            neg_inv: inv.wrapping_neg(),
            r2,
        }
    }

    /// Montgomery reduction of `t < p·2⁶⁴`: `t·2⁻⁶⁴ mod p`.
    fn redc(&self, t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(self.neg_inv);
        let u = ((t + u128::from(m) * u128::from(self.p)) >> 64) as u64;
        if u >= self.p {
            u - self.p
        } else {
            u
        }
    }

    /// Leaves Montgomery form.
    fn value(&self, c: u64) -> u64 {
        self.redc(u128::from(c))
    }
}

impl Ring for Modular {
    type C = u64;
    fn embed(&self, b: &BigInt) -> u64 {
        let x = b.mod_floor(&BigInt::from(self.p)).to_u64().expect("reduced residue");
        self.redc(u128::from(x) * u128::from(self.r2))
    }
    fn one(&self) -> u64 {
        self.redc(u128::from(self.r2))
    }
    fn is_zero(&self, c: &u64) -> bool {
        *c == 0
    }
    fn mul_acc(&self, acc: &mut u64, a: u64, b: u64, negative: bool) {
        let prod = self.redc(u128::from(a) * u128::from(b));
        let p = self.p;
        *acc = if negative {
            if *acc >= prod {
                *acc - prod
            } else {
                *acc + p - prod
            }
        } else {
            let s = *acc + prod;
            if s >= p {
                s - p
            } else {
                s
            }
        };
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mulmod = |a: u64, b: u64| ((u128::from(a) * u128::from(b)) % u128::from(n)) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        r
    };
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // Deterministic Miller–Rabin for all 64-bit n with these bases.
    [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37].iter().all(|&a| {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            return true;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                return true;
            }
        }
        false
    })
}

/// The first `count` primes below 2⁶², largest first; each exceeds 2⁶¹.
fn primes(count: usize) -> Vec<u64> {
    static CACHE: OnceLock<std::sync::Mutex<Vec<u64>>> = OnceLock::new();
    let mut cache = CACHE.get_or_init(Default::default).lock().expect("prime cache");
    let mut candidate = cache.last().map_or(1u64 << 62, |&p| p - 2) | 1;
    if cache.is_empty() {
        candidate -= 2;
    }
    while cache.len() < count {
        if is_prime(candidate) {
            cache.push(candidate);
        }
        candidate -= 2;
    }
    cache[..count].to_vec()
}

/// Mixed-radix monomial indices: exponent `e_v` has stride `∏_{u<v} (b_u + 1)`
/// where `b_v` bounds variable `v`'s exponent in every result, so monomial
/// products are index sums without carries.
struct Layout {
    radix: Vec<usize>,
    size: usize,
}

impl Layout {
    fn new(bounds: &[u32]) -> Option<Self> {
        let radix: Vec<usize> = bounds.iter().map(|&b| b as usize + 1).collect();
        let size = radix.iter().try_fold(1usize, |acc, &r| acc.checked_mul(r))?;
        (size <= MAX_DENSE).then_some(Layout { radix, size })
    }

    fn encode(&self, exps: &[u32]) -> usize {
        exps.iter()
            .zip(&self.radix)
            .rev()
            .fold(0, |acc, (&e, &r)| acc * r + e as usize)
    }

    fn decode(&self, mut idx: usize) -> Vec<u32> {
        self.radix
            .iter()
            .map(|&r| {
                let e = idx % r;
                idx /= r;
                e as u32
            })
            .collect()
    }
}

/// Dense accumulator that remembers which slots it touched, so draining costs
/// time proportional to the output rather than to the layout.
struct Accumulator<C> {
    dense: Vec<C>,
    seen: Vec<bool>,
    touched: Vec<usize>,
}

impl<C: Copy + Default> Accumulator<C> {
    fn new(size: usize) -> Self {
        Accumulator {
            dense: vec![C::default(); size],
            seen: vec![false; size],
            touched: Vec::new(),
        }
    }

    fn add_product<R: Ring<C = C>>(&mut self, ring: &R, a: &Sparse<C>, b: &Sparse<C>, negative: bool) {
        for &(ma, ca) in a {
            for &(mb, cb) in b {
                let idx = ma + mb;
                if !self.seen[idx] {
                    self.seen[idx] = true;
                    self.touched.push(idx);
                }
                ring.mul_acc(&mut self.dense[idx], ca, cb, negative);
            }
        }
    }

    fn drain<R: Ring<C = C>>(&mut self, ring: &R) -> Sparse<C> {
        let mut out = Vec::with_capacity(self.touched.len());
        for idx in self.touched.drain(..) {
            let c = std::mem::take(&mut self.dense[idx]);
            self.seen[idx] = false;
            if !ring.is_zero(&c) {
                out.push((idx, c));
            }
        }
        out
    }
}

/// Scales polynomials by the lcm of all their denominators and indexes them.
fn integer_rows(polys: &[&MultiPoly], layout: &Layout) -> (BigInt, Vec<IntTerms>) {
    let lcm = polys
        .iter()
        .flat_map(|p| p.terms().map(|(_, c)| c.denom().clone()))
        .fold(BigInt::one(), |acc, d| acc.lcm(&d));
    let packed = polys
        .iter()
        .map(|p| {
            p.terms()
                .map(|(mono, c)| (layout.encode(mono.exponents()), c.numer() * (&lcm / c.denom())))
                .collect()
        })
        .collect();
    (lcm, packed)
}

fn norm1(terms: &IntTerms) -> BigInt {
    terms.iter().map(|(_, c)| c.abs()).sum()
}

fn unpack_poly(nvars: usize, layout: &Layout, terms: IntTerms, scale: &BigInt) -> MultiPoly {
    let terms = terms
        .into_iter()
        .map(|(idx, c)| (layout.decode(idx), ExactScalar::new(c, scale.clone())));
    MultiPoly::from_terms(nvars, terms).expect("exponent vectors have the ring's arity")
}

fn to_ring<R: Ring>(ring: &R, terms: &IntTerms) -> Sparse<R::C> {
    terms.iter().map(|(m, c)| (*m, ring.embed(c))).collect()
}

/// Runs `pass` in `i128` when every coefficient (and every partial sum) is
/// bounded by `bound < 2^WORD_BITS`, otherwise once per prime and combines the
/// residues by the Chinese remainder theorem.
fn exact_integer<F, G>(bound: &BigInt, word_pass: F, mod_pass: G) -> IntTerms
where
    F: FnOnce(&Word) -> Sparse<i128>,
    G: Fn(&Modular) -> Sparse<u64>,
{
    if bound.bits() <= WORD_BITS {
        return word_pass(&Word)
            .into_iter()
            .map(|(m, c)| (m, BigInt::from(c)))
            .collect();
    }
    // Need ∏p > 2·bound; every prime exceeds 2⁶¹.
    let count = (bound.bits() + 1).div_ceil(61) as usize;
    let mut values: FxHashMap<usize, BigInt> = FxHashMap::default();
    let mut modulus = BigInt::one();
    for p in primes(count) {
        let ring = Modular::new(p);
        let residues: FxHashMap<usize, u64> = mod_pass(&ring).into_iter().collect();
        let pb = BigInt::from(p);
        let inv = modulus.mod_floor(&pb).modpow(&(&pb - 2u32), &pb);
        for &m in residues.keys() {
            values.entry(m).or_default();
        }
        // Garner step: x ← x + M·((r − x)·M⁻¹ mod p) for every monomial seen so far.
        for (m, x) in values.iter_mut() {
            let r = BigInt::from(residues.get(m).map_or(0, |&c| ring.value(c)));
            let t = ((&r - &*x) * &inv).mod_floor(&pb);
            *x += &modulus * t;
        }
        modulus *= pb;
    }
    let half = &modulus >> 1u32;
    values
        .into_iter()
        .map(|(m, x)| (m, if x > half { x - &modulus } else { x }))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

/// Product of two polynomials on the dense integer layout, or `None` when the
/// layout would be too large; callers fall back to the generic product.
pub(crate) fn product_packed(a: &MultiPoly, b: &MultiPoly) -> Option<MultiPoly> {
    let nvars = a.nvars();
    let bounds: Vec<u32> = (0..nvars)
        .map(|v| a.degree_in(v).unwrap_or(0) + b.degree_in(v).unwrap_or(0))
        .collect();
    let layout = Layout::new(&bounds)?;
    let (la, pa) = integer_rows(&[a], &layout);
    let (lb, pb) = integer_rows(&[b], &layout);
    let (pa, pb) = (&pa[0], &pb[0]);
    let bound = norm1(pa) * norm1(pb);
    let size = layout.size;
    let prod = exact_integer(&bound, |r| product_pass(r, size, pa, pb), |r| product_pass(r, size, pa, pb));
    Some(unpack_poly(nvars, &layout, prod, &(la * lb)))
}

fn product_pass<R: Ring>(ring: &R, size: usize, a: &IntTerms, b: &IntTerms) -> Sparse<R::C> {
    let mut acc = Accumulator::new(size);
    acc.add_product(ring, &to_ring(ring, a), &to_ring(ring, b), false);
    acc.drain(ring)
}

/// Determinant on the dense integer layout, or `None` when that cannot
/// represent it (non-square, more than 16 rows, or too large a layout);
/// callers fall back to Bareiss.
pub(crate) fn determinant_packed(m: &PolyMatrix) -> Option<MultiPoly> {
    let n = m.rows();
    let nvars = m.nvars();
    if n != m.cols() || n > 16 {
        return None;
    }
    let entries: Vec<Vec<&MultiPoly>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j)).collect()).collect();
    // Every minor's exponent in variable v is at most the sum over rows of
    // the row's largest exponent in v.
    let bounds: Vec<u32> = (0..nvars)
        .map(|v| {
            entries
                .iter()
                .map(|row| row.iter().filter_map(|p| p.degree_in(v)).max().unwrap_or(0))
                .sum()
        })
        .collect();
    let layout = Layout::new(&bounds)?;
    let mut scale = BigInt::one();
    // Permanent-style bound: every coefficient of every minor, and every
    // partial sum formed while accumulating one, is at most ∏ row ℓ¹ norms.
    let mut bound = BigInt::one();
    let rows: Vec<Vec<IntTerms>> = entries
        .iter()
        .map(|row| {
            let (lcm, packed) = integer_rows(row, &layout);
            scale *= lcm;
            bound *= packed.iter().map(norm1).sum::<BigInt>().max(BigInt::one());
            packed
        })
        .collect();
    let size = layout.size;
    let det = exact_integer(&bound, |r| expand(r, size, &rows), |r| expand(r, size, &rows));
    Some(unpack_poly(nvars, &layout, det, &scale))
}

/// Laplace expansion over column subsets in one coefficient ring: the minor
/// on rows `0..=k` and column set `T` is `Σ_{c ∈ T} ± m[k][c] · minor(T∖c)`.
fn expand<R: Ring>(ring: &R, size: usize, rows: &[Vec<IntTerms>]) -> Sparse<R::C> {
    let n = rows.len();
    if n == 0 {
        return vec![(0, ring.one())];
    }
    let rows: Vec<Vec<Sparse<R::C>>> = rows
        .iter()
        .map(|row| row.iter().map(|e| to_ring(ring, e)).collect())
        .collect();
    let mut acc = Accumulator::new(size);
    let mut minors: HashMap<u32, Sparse<R::C>> = HashMap::from([(0u32, vec![(0, ring.one())])]);
    for (k, row) in rows.iter().enumerate() {
        let mut next = HashMap::new();
        for t in (1u32..1 << n).filter(|t| t.count_ones() as usize == k + 1) {
            for (c, entry) in row.iter().enumerate() {
                if t & (1 << c) == 0 || entry.is_empty() {
                    continue;
                }
                let Some(prev) = minors.get(&(t & !(1 << c))) else {
                    continue;
                };
                // Position of c within T, in increasing column order.
                let pos = (t & ((1 << c) - 1)).count_ones() as usize;
                acc.add_product(ring, entry, prev, (k + pos) % 2 == 1);
            }
            let minor = acc.drain(ring);
            if !minor.is_empty() {
                next.insert(t, minor);
            }
        }
        minors = next;
    }
    minors.remove(&((1u32 << n) - 1)).unwrap_or_default()
}
