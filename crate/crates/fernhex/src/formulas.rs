//! Exact arithmetic for every closed-form counting expression: integer and
//! half-integer hyperfactorials, the boxed-plane-partition product, dented
//! trapezoid and semihexagon counts, cored-hexagon counts (with their three
//! parity branches), two-lobe core ratios, and the general fern ratio.
//!
//! Half-integer hyperfactorials are exact values `q * pi^(t/2)` with `q`
//! rational; any pi power surviving to the end of a count evaluation is an
//! invariant breach and reported as an error, never rounded away.

use crate::builder::{semihexagon_dents, FernSpec};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Div, DivAssign, Mul, MulAssign};
use std::sync::{Mutex, OnceLock};

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("hyperfactorial argument must be nonnegative, got {0}/2")]
    NegativeArgument(i64),
    #[error("bad dent positions: {0}")]
    BadDentPositions(String),
    #[error("parameters ({x},{y},{z}) do not satisfy the {pair} parity requirement")]
    ParityMismatch {
        pair: SharedParity,
        x: u32,
        y: u32,
        z: u32,
    },
    #[error("{context} must be a nonnegative integer, got {value}")]
    NonIntegralResult {
        context: &'static str,
        value: String,
    },
}

/// Which pair of the core parameters `(x, y, z)` is required to share a
/// parity; selects among the three equivalent formula branches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SharedParity {
    YZ,
    XY,
    XZ,
}

impl SharedParity {
    pub const ALL: [SharedParity; 3] = [SharedParity::YZ, SharedParity::XY, SharedParity::XZ];

    pub fn holds(self, x: u32, y: u32, z: u32) -> bool {
        match self {
            SharedParity::YZ => y % 2 == z % 2,
            SharedParity::XY => x % 2 == y % 2,
            SharedParity::XZ => x % 2 == z % 2,
        }
    }
}

impl fmt::Display for SharedParity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SharedParity::YZ => "y=z",
            SharedParity::XY => "x=y",
            SharedParity::XZ => "x=z",
        })
    }
}

struct HyperCache {
    hyper: Vec<BigUint>,
    factorial: Vec<BigUint>,
}

static HYPER_CACHE: OnceLock<Mutex<HyperCache>> = OnceLock::new();

/// The hyperfactorial `0! 1! ... (n-1)!`; memoized.
pub fn hyperfactorial(n: u32) -> BigUint {
    let cache = HYPER_CACHE.get_or_init(|| {
        Mutex::new(HyperCache {
            hyper: vec![BigUint::one()],
            factorial: vec![BigUint::one()],
        })
    });
    let mut cache = cache.lock().unwrap();
    while cache.hyper.len() <= n as usize {
        let k = cache.hyper.len();
        let next_h = cache.hyper.last().unwrap() * cache.factorial.last().unwrap();
        let next_f = cache.factorial.last().unwrap() * BigUint::from(k);
        cache.hyper.push(next_h);
        cache.factorial.push(next_f);
    }
    cache.hyper[n as usize].clone()
}

/// An exact value `coeff * pi^(pi_half_power / 2)`.
///
/// Closed under multiplication and division; the half-integer hyperfactorial
/// values live here. "Integral" means no pi power and a nonnegative integer
/// coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiMonomial {
    coeff: BigRational,
    pi_half_power: i64,
}

impl PiMonomial {
    pub fn one() -> Self {
        Self {
            coeff: BigRational::one(),
            pi_half_power: 0,
        }
    }

    pub fn from_nat(n: BigUint) -> Self {
        Self {
            coeff: BigRational::from_integer(BigInt::from(n)),
            pi_half_power: 0,
        }
    }

    pub fn new(coeff: BigRational, pi_half_power: i64) -> Self {
        Self {
            coeff,
            pi_half_power,
        }
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    /// Exponent `t` in `pi^(t/2)`.
    pub fn pi_half_power(&self) -> i64 {
        self.pi_half_power
    }

    /// The rational value, provided every pi power has cancelled.
    pub fn into_ratio(self, context: &'static str) -> Result<BigRational, FormulaError> {
        if self.pi_half_power != 0 {
            return Err(FormulaError::NonIntegralResult {
                context,
                value: self.to_string(),
            });
        }
        Ok(self.coeff)
    }

    /// The nonnegative integer value, provided pi cancelled and the
    /// coefficient is a nonnegative integer.
    pub fn into_nat(self, context: &'static str) -> Result<BigUint, FormulaError> {
        let value = self.to_string();
        let ratio = self.into_ratio(context)?;
        if !ratio.is_integer() || ratio.is_negative() {
            return Err(FormulaError::NonIntegralResult { context, value });
        }
        Ok(ratio.to_integer().to_biguint().expect("nonnegative"))
    }
}

impl fmt::Display for PiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pi_half_power == 0 {
            write!(f, "{}", self.coeff)
        } else {
            write!(f, "{}*pi^({}/2)", self.coeff, self.pi_half_power)
        }
    }
}

impl Mul for PiMonomial {
    type Output = PiMonomial;
    fn mul(self, rhs: PiMonomial) -> PiMonomial {
        PiMonomial {
            coeff: self.coeff * rhs.coeff,
            pi_half_power: self.pi_half_power + rhs.pi_half_power,
        }
    }
}

impl Div for PiMonomial {
    type Output = PiMonomial;
    fn div(self, rhs: PiMonomial) -> PiMonomial {
        PiMonomial {
            coeff: self.coeff / rhs.coeff,
            pi_half_power: self.pi_half_power - rhs.pi_half_power,
        }
    }
}

impl MulAssign for PiMonomial {
    fn mul_assign(&mut self, rhs: PiMonomial) {
        self.coeff *= rhs.coeff;
        self.pi_half_power += rhs.pi_half_power;
    }
}

impl DivAssign for PiMonomial {
    fn div_assign(&mut self, rhs: PiMonomial) {
        self.coeff /= rhs.coeff;
        self.pi_half_power -= rhs.pi_half_power;
    }
}

/// Hyperfactorial at integer or half-integer argument `twice / 2`.
///
/// Integer arguments give the plain hyperfactorial. For `n + 1/2` the value
/// is the product `Gamma(3/2) Gamma(5/2) ... Gamma(n + 1/2)`, carried
/// exactly as a rational times a power of `sqrt(pi)` via
/// `Gamma(k + 3/2) = ((2k+1)!! / 2^(k+1)) sqrt(pi)`.
pub fn hyperfactorial_half(twice: i64) -> Result<PiMonomial, FormulaError> {
    if twice < 0 {
        return Err(FormulaError::NegativeArgument(twice));
    }
    Ok(hyper2(twice as u32))
}

/// `H(twice / 2)` for nonnegative doubled arguments; the workhorse behind
/// every formula with floor/ceil halves in it.
fn hyper2(twice: u32) -> PiMonomial {
    if twice % 2 == 0 {
        return PiMonomial::from_nat(hyperfactorial(twice / 2));
    }
    let n = (twice - 1) / 2; // argument is n + 1/2
    let mut numer = BigUint::one();
    let mut double_fact = BigUint::one(); // (2k+1)!! running value
    for k in 0..n {
        double_fact *= BigUint::from(2 * k + 1);
        numer *= &double_fact;
    }
    let denom = BigUint::one() << (n as u64 * (n as u64 + 1) / 2);
    PiMonomial::new(
        BigRational::new(BigInt::from(numer), BigInt::from(denom)),
        n as i64,
    )
}

fn nat_ratio(n: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `H(p) / H(q)` as an exact rational.
fn hyper_ratio(p: u32, q: u32) -> BigRational {
    BigRational::new(
        BigInt::from(hyperfactorial(p)),
        BigInt::from(hyperfactorial(q)),
    )
}

/// Number of lozenge tilings of the hexagon with sides `a, b, c, a, b, c`
/// (equivalently, plane partitions in an `a x b x c` box).
pub fn macmahon_count(a: u32, b: u32, c: u32) -> BigUint {
    let numer =
        hyperfactorial(a) * hyperfactorial(b) * hyperfactorial(c) * hyperfactorial(a + b + c);
    let denom = hyperfactorial(a + b) * hyperfactorial(a + c) * hyperfactorial(b + c);
    let (q, r) = num_integer::Integer::div_rem(&numer, &denom);
    debug_assert!(r.is_zero(), "boxed count is integral");
    q
}

/// Number of tilings of the trapezoid `top, legs, top+legs, legs` with up
/// cells removed at base positions `dents`: the product of
/// `(x_j - x_i) / (j - i)` over dent pairs.
pub fn trapezoid_count(top: u32, legs: u32, dents: &[u32]) -> Result<BigUint, FormulaError> {
    if dents.len() != legs as usize {
        return Err(FormulaError::BadDentPositions(format!(
            "expected {legs} dents, got {}",
            dents.len()
        )));
    }
    let base = top + legs;
    for (i, &d) in dents.iter().enumerate() {
        if d < 1 || d > base {
            return Err(FormulaError::BadDentPositions(format!(
                "dent {d} outside base 1..={base}"
            )));
        }
        if i > 0 && dents[i - 1] >= d {
            return Err(FormulaError::BadDentPositions(
                "not strictly increasing".into(),
            ));
        }
    }
    let mut numer = BigUint::one();
    let mut denom = BigUint::one();
    for j in 1..dents.len() {
        for i in 0..j {
            numer *= BigUint::from(dents[j] - dents[i]);
            denom *= BigUint::from((j - i) as u32);
        }
    }
    let (q, r) = num_integer::Integer::div_rem(&numer, &denom);
    debug_assert!(r.is_zero(), "dent-position product is integral");
    Ok(q)
}

/// Number of tilings of the semihexagon with base segment lengths `blocks`
/// (odd-indexed segments removed). An even-length list reduces to the
/// odd-length prefix because its last kept segment only forces tiles; the
/// geometric dent positions then feed the trapezoid product.
pub fn semihex_count(blocks: &[u32]) -> BigUint {
    if blocks.is_empty() {
        return BigUint::one();
    }
    if blocks.len() % 2 == 0 {
        return semihex_count(&blocks[..blocks.len() - 1]);
    }
    let dents = semihexagon_dents(blocks);
    let legs = dents.len() as u32;
    let top = blocks.iter().sum::<u32>() - legs;
    trapezoid_count(top, legs, &dents).expect("dents valid by construction")
}

/// Diagnostic companion to [`semihex_count`]: the alternative closed product
/// of hyperfactorials over consecutive block sums (numerator over odd-length
/// windows, denominator over even-length ones). Known to disagree with the
/// geometric count on asymmetric block lists such as `(2,1,1)`; exposed so
/// the disagreement is visible, not silently absorbed.
pub fn semihex_product_form(blocks: &[u32]) -> BigRational {
    if blocks.is_empty() {
        return BigRational::one();
    }
    if blocks.len() % 2 == 0 {
        return semihex_product_form(&blocks[..blocks.len() - 1]);
    }
    let n = blocks.len();
    let mut value = BigRational::one();
    for i in 0..n {
        let mut sum = blocks[i];
        for (len, &b) in blocks[i + 1..n].iter().enumerate() {
            sum += b;
            let h = nat_ratio(hyperfactorial(sum));
            // window length is len + 2
            if len % 2 == 1 {
                value *= h;
            } else {
                value /= h;
            }
        }
    }
    value
}

/// Master product for the cored-hexagon count, valid when `y` and `z` share
/// a parity. All half-integer hyperfactorials cancel in pi by the time the
/// product is assembled.
fn cored_master(x: u32, y: u32, z: u32, m: u32) -> PiMonomial {
    debug_assert!(y % 2 == z % 2);
    let h = |t: u32| hyper2(2 * t); // integer argument
    let hh = |t2: u32| hyper2(t2); // doubled (possibly odd) argument
    let s = x + y + z;
    let mut v = PiMonomial::one();
    // Integer-argument block.
    v *= h(x + m) * h(y + m) * h(z + m) * h(s + m) * h(s / 2 + m) * h(s.div_ceil(2) + m);
    v /= h(x + y + m) * h(x + z + m) * h(y + z + m);
    v /= h((x + y).div_ceil(2) + m) * h((x + z) / 2 + m) * h((y + z) / 2 + m);
    // Half-argument block over single parameters.
    v *= hh(m) * hh(m);
    for t in [x, y, z] {
        v *= h(t / 2) * h(t.div_ceil(2));
        v /= hh(2 * (t / 2) + m) * hh(2 * t.div_ceil(2) + m);
    }
    // Half-argument block over pair sums.
    v *= hh(x + y - (x + y) % 2 + m) * hh(x + y + (x + y) % 2 + m);
    v *= hh(x + z - (x + z) % 2 + m) * hh(x + z + (x + z) % 2 + m);
    v *= hh(y + z + m) * hh(y + z + m);
    v /= hh(s - s % 2 + m) * hh(s + s % 2 + m);
    v /= h((x + y) / 2) * h((x + z).div_ceil(2)) * h((y + z) / 2);
    v
}

/// Cored-hexagon count evaluated through the branch that assumes `pair`
/// shares parity. The master product wants the matching pair in its last two
/// slots, so the other branches swap the odd parameter into the first slot;
/// the counts themselves fix this relabeling (the placement offsets break
/// the hexagon's rotational symmetry, so only these transpositions agree
/// with the exact counts).
pub fn cored_count_in(
    pair: SharedParity,
    x: u32,
    y: u32,
    z: u32,
    m: u32,
) -> Result<PiMonomial, FormulaError> {
    if !pair.holds(x, y, z) {
        return Err(FormulaError::ParityMismatch { pair, x, y, z });
    }
    Ok(match pair {
        SharedParity::YZ => cored_master(x, y, z, m),
        SharedParity::XY => cored_master(z, y, x, m),
        SharedParity::XZ => cored_master(y, x, z, m),
    })
}

/// Number of lozenge tilings of the cored hexagon (hexagon with an
/// up-pointing triangular hole of side `m` by the core placement rules).
/// Some two of `x, y, z` always share a parity; the first applicable branch
/// is used and the result must come out a nonnegative integer.
pub fn cored_count(x: u32, y: u32, z: u32, m: u32) -> Result<BigUint, FormulaError> {
    let pair = SharedParity::ALL
        .into_iter()
        .find(|p| p.holds(x, y, z))
        .expect("two of three parities always agree");
    cored_count_in(pair, x, y, z, m)?.into_nat("cored hexagon count")
}

/// Ratio of the two-lobe fern-cored count to the cored count with the merged
/// core, evaluated through the branch that assumes `pair` shares parity.
pub fn two_lobe_ratio_in(
    pair: SharedParity,
    x: u32,
    y: u32,
    z: u32,
    a: u32,
    b: u32,
) -> Result<BigRational, FormulaError> {
    if !pair.holds(x, y, z) {
        return Err(FormulaError::ParityMismatch { pair, x, y, z });
    }
    let hr = hyper_ratio;
    let fxy = (x + y) / 2;
    let cxy = (x + y).div_ceil(2);
    let fxz = (x + z) / 2;
    let cxz = (x + z).div_ceil(2);
    let fyz = (y + z) / 2;
    let cyz = (y + z).div_ceil(2);
    let mut r = hr(a, a + b) * nat_ratio(hyperfactorial(b));
    match pair {
        SharedParity::YZ => {
            r *= hr(cxz, cxy) * nat_ratio(hyperfactorial(fyz));
            r *= hr(a + fxy, a + b + fxy) * nat_ratio(hyperfactorial(b + cxy));
            r *= hr(a + b + fxz, a + fxz) / nat_ratio(hyperfactorial(b + cxz));
            r *= hr(a + b + fyz, a + fyz) / nat_ratio(hyperfactorial(b + fyz));
        }
        SharedParity::XY => {
            r *= hr(cxz, fxy) * nat_ratio(hyperfactorial(fyz));
            r *= hr(a + fxy, a + b + fxy) * nat_ratio(hyperfactorial(b + fxy));
            r *= hr(a + b + fxz, a + fxz) / nat_ratio(hyperfactorial(b + cxz));
            r *= hr(a + b + cyz, a + cyz) / nat_ratio(hyperfactorial(b + fyz));
        }
        SharedParity::XZ => {
            r *= hr(fxz, cxy) * nat_ratio(hyperfactorial(cyz));
            r *= hr(a + fxy, a + b + fxy) * nat_ratio(hyperfactorial(b + cxy));
            r *= hr(a + b + fxz, a + fxz) / nat_ratio(hyperfactorial(b + fxz));
            r *= hr(a + b + fyz, a + fyz) / nat_ratio(hyperfactorial(b + cyz));
        }
    }
    Ok(r)
}

/// As [`two_lobe_ratio_in`], dispatching on the first applicable parity pair.
pub fn two_lobe_ratio(x: u32, y: u32, z: u32, a: u32, b: u32) -> BigRational {
    let pair = SharedParity::ALL
        .into_iter()
        .find(|p| p.holds(x, y, z))
        .expect("two of three parities always agree");
    two_lobe_ratio_in(pair, x, y, z, a, b).expect("pair verified")
}

/// Number of tilings of the two-lobe fern-cored hexagon, assembled as ratio
/// times cored count; must come out integral.
pub fn two_lobe_count(x: u32, y: u32, z: u32, a: u32, b: u32) -> Result<BigUint, FormulaError> {
    let cored = cored_count(x, y, z, a + b)?;
    let value = two_lobe_ratio(x, y, z, a, b) * nat_ratio(cored);
    ratio_to_nat(value, "two-lobe fern-cored count")
}

fn ratio_to_nat(value: BigRational, context: &'static str) -> Result<BigUint, FormulaError> {
    if !value.is_integer() || value.is_negative() {
        return Err(FormulaError::NonIntegralResult {
            context,
            value: value.to_string(),
        });
    }
    Ok(value.to_integer().to_biguint().expect("nonnegative"))
}

/// Ratio of the fern-cored count to the count with the fern flattened to its
/// two-lobe silhouette `(o, e)`.
///
/// The value depends on `x, y, z` only through the sums `x+y` and `x+z`, and
/// collapses to the product of the two semihexagon counts whenever `y = z`.
/// With an odd lobe count the fern is treated as padded by a trailing zero
/// lobe, which makes the leading semihexagon factor use all `k` lobes.
pub fn fern_ratio(x: u32, y: u32, z: u32, spec: &FernSpec) -> BigRational {
    let lobes = spec.lobes();
    let k = lobes.len();
    let total = spec.total();
    let o = spec.up_sum();
    let e = spec.down_sum();
    let fxy = (x + y) / 2;
    let cxy = (x + y).div_ceil(2);
    let fxz = (x + z) / 2;
    let cxz = (x + z).div_ceil(2);

    let first = if k % 2 == 0 {
        semihex_count(&lobes[..k - 1])
    } else {
        semihex_count(lobes)
    };
    let rest = semihex_count(&lobes[1..]);
    let mut r = nat_ratio(first) * nat_ratio(rest);

    r *= hyper_ratio(fxz + o, fxy + o) * hyper_ratio(cxz + e, cxy + e);
    let mut j = 1;
    while j <= k {
        let p = spec.prefix_sum(j);
        let c = total - p;
        r *= hyper_ratio(fxy + p, fxz + p) * hyper_ratio(cxy + c, cxz + c);
        j += 2;
    }
    let mut j = 2;
    while j < k {
        let p = spec.prefix_sum(j);
        let c = total - p;
        r *= hyper_ratio(fxz + p, fxy + p) * hyper_ratio(cxz + c, cxy + c);
        j += 2;
    }
    r
}

/// Number of lozenge tilings of the fern-cored hexagon by pure formula:
/// fern ratio times the two-lobe count of the flattened fern.
pub fn fern_cored_count(x: u32, y: u32, z: u32, spec: &FernSpec) -> Result<BigUint, FormulaError> {
    let flattened = two_lobe_count(x, y, z, spec.up_sum(), spec.down_sum())?;
    let value = fern_ratio(x, y, z, spec) * nat_ratio(flattened);
    ratio_to_nat(value, "fern-cored count")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fern(lobes: &[u32]) -> FernSpec {
        FernSpec::new(lobes.to_vec()).unwrap()
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn hyperfactorials() {
        assert_eq!(hyperfactorial(0), big(1));
        assert_eq!(hyperfactorial(1), big(1));
        assert_eq!(hyperfactorial(4), big(12));
        assert_eq!(hyperfactorial(6), big(34560));
    }

    #[test]
    fn half_hyperfactorials() {
        assert_eq!(
            hyperfactorial_half(1).unwrap(),
            PiMonomial::new(ratio(1, 1), 0)
        );
        assert_eq!(
            hyperfactorial_half(3).unwrap(),
            PiMonomial::new(ratio(1, 2), 1)
        );
        assert_eq!(
            hyperfactorial_half(5).unwrap(),
            PiMonomial::new(ratio(3, 8), 2)
        );
        assert_eq!(
            hyperfactorial_half(4).unwrap(),
            PiMonomial::from_nat(big(1))
        );
        assert_eq!(
            hyperfactorial_half(6).unwrap(),
            PiMonomial::from_nat(big(2))
        );
        assert_eq!(
            hyperfactorial_half(-1),
            Err(FormulaError::NegativeArgument(-1))
        );
    }

    #[test]
    fn boxed_counts() {
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(macmahon_count(a, b, 0), big(1));
            }
        }
        assert_eq!(macmahon_count(1, 1, 1), big(2));
        assert_eq!(macmahon_count(2, 2, 2), big(20));
        assert_eq!(macmahon_count(3, 3, 3), big(980));
        assert_eq!(macmahon_count(2, 1, 1), big(3));
    }

    #[test]
    fn trapezoid_products() {
        // Consecutive dents force everything.
        for n in 0..6u32 {
            let dents: Vec<u32> = (1..=n).collect();
            assert_eq!(trapezoid_count(3, n, &dents).unwrap(), big(1));
        }
        assert_eq!(trapezoid_count(1, 2, &[1, 3]).unwrap(), big(2));
        assert_eq!(trapezoid_count(1, 3, &[1, 2, 4]).unwrap(), big(3));
        assert!(matches!(
            trapezoid_count(1, 2, &[1]),
            Err(FormulaError::BadDentPositions(_))
        ));
        assert!(matches!(
            trapezoid_count(1, 2, &[1, 5]),
            Err(FormulaError::BadDentPositions(_))
        ));
    }

    #[test]
    fn semihex_counts() {
        assert_eq!(semihex_count(&[]), big(1));
        for b1 in 0..4 {
            for b2 in 0..4 {
                assert_eq!(semihex_count(&[b1, b2]), big(1));
            }
        }
        assert_eq!(semihex_count(&[2, 1, 1]), big(3));
        assert_eq!(semihex_count(&[1, 1, 1]), big(2));
        // Even-length lists reduce by dropping the trailing kept segment.
        for blocks in [&[2u32, 1, 1, 3][..], &[1, 2, 2, 2][..], &[3, 1][..]] {
            assert_eq!(
                semihex_count(blocks),
                semihex_count(&blocks[..blocks.len() - 1])
            );
        }
    }

    #[test]
    fn product_form_diagnostic() {
        // The alternative product matches the unit staircase...
        assert_eq!(semihex_product_form(&[1, 1, 1]), ratio(2, 1));
        assert_eq!(
            semihex_product_form(&[1, 1, 1]),
            nat_ratio(semihex_count(&[1, 1, 1]))
        );
        // ...but overcounts already on small lists: 6 against the true 3 on
        // (2,1,1), and 72 against 6 on (2,1,2).
        assert_eq!(semihex_product_form(&[2, 1, 1]), ratio(6, 1));
        assert_eq!(semihex_count(&[2, 1, 1]), big(3));
        assert_eq!(semihex_product_form(&[2, 1, 2]), ratio(72, 1));
        assert_eq!(semihex_count(&[2, 1, 2]), big(6));
    }

    #[test]
    fn cored_counts_specialize() {
        for x in 0..4 {
            for y in 0..4 {
                for z in 0..4 {
                    assert_eq!(cored_count(x, y, z, 0).unwrap(), macmahon_count(x, y, z));
                }
            }
        }
        for m in 0..6 {
            assert_eq!(cored_count(0, 0, 0, m).unwrap(), big(1));
        }
        // Frozen from explicit matching enumeration of the holed hexagon.
        assert_eq!(cored_count(1, 1, 1, 1).unwrap(), big(2));
    }

    #[test]
    fn cored_branches_agree_on_shared_parities() {
        for x in 0..5u32 {
            for y in 0..5u32 {
                for z in 0..5u32 {
                    for m in 0..4u32 {
                        let values: Vec<PiMonomial> = SharedParity::ALL
                            .into_iter()
                            .filter(|p| p.holds(x, y, z))
                            .map(|p| cored_count_in(p, x, y, z, m).unwrap())
                            .collect();
                        assert!(!values.is_empty());
                        for v in &values[1..] {
                            assert_eq!(*v, values[0], "({x},{y},{z},{m})");
                        }
                        assert_eq!(values[0].pi_half_power(), 0, "({x},{y},{z},{m})");
                    }
                }
            }
        }
    }

    #[test]
    fn parity_mismatch_is_reported() {
        assert!(matches!(
            cored_count_in(SharedParity::YZ, 0, 1, 2, 1),
            Err(FormulaError::ParityMismatch { .. })
        ));
        assert!(matches!(
            two_lobe_ratio_in(SharedParity::XY, 1, 2, 1, 1, 1),
            Err(FormulaError::ParityMismatch { .. })
        ));
    }

    #[test]
    fn two_lobe_ratio_edge_cases() {
        for x in 0..4 {
            for y in 0..4 {
                for z in 0..4 {
                    assert_eq!(two_lobe_ratio(x, y, z, 0, 0), BigRational::one());
                    // A fern with an empty down lobe is a single triangular core.
                    for m in 0..3 {
                        assert_eq!(
                            two_lobe_count(x, y, z, m, 0).unwrap(),
                            cored_count(x, y, z, m).unwrap(),
                            "({x},{y},{z},{m})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn two_lobe_branches_agree_when_all_parities_match() {
        for (x, y, z) in [(1, 1, 1), (2, 2, 2), (1, 3, 1), (2, 4, 2), (3, 1, 3)] {
            for (a, b) in [(1, 1), (2, 1), (1, 2), (0, 2)] {
                let vals: Vec<BigRational> = SharedParity::ALL
                    .into_iter()
                    .map(|p| two_lobe_ratio_in(p, x, y, z, a, b).unwrap())
                    .collect();
                assert_eq!(vals[0], vals[1]);
                assert_eq!(vals[1], vals[2]);
            }
        }
    }

    #[test]
    fn fern_ratio_small_lobe_counts_are_trivial() {
        for (x, y, z) in [(0, 0, 0), (1, 2, 3), (2, 2, 4), (3, 0, 1)] {
            for lobes in [&[2u32][..], &[0][..], &[1, 2][..], &[3, 1][..]] {
                assert_eq!(fern_ratio(x, y, z, &fern(lobes)), BigRational::one());
            }
        }
    }

    #[test]
    fn fern_ratio_collapses_when_y_equals_z() {
        let spec = fern(&[1, 2, 1, 2]);
        let expected = nat_ratio(semihex_count(&[1, 2, 1])) * nat_ratio(semihex_count(&[2, 1, 2]));
        for (x, y) in [(0, 0), (1, 2), (3, 3), (4, 1)] {
            assert_eq!(fern_ratio(x, y, y, &spec), expected);
        }
    }

    #[test]
    fn three_lobe_ratio_is_the_boxed_count() {
        for (a1, a2, a3) in [(1, 1, 1), (2, 1, 1), (1, 2, 3), (2, 2, 2), (0, 2, 1)] {
            let spec = fern(&[a1, a2, a3]);
            for (x, y) in [(0, 0), (2, 1), (3, 3)] {
                assert_eq!(
                    fern_ratio(x, y, y, &spec),
                    nat_ratio(macmahon_count(a1, a2, a3)),
                    "({a1},{a2},{a3}) at ({x},{y})"
                );
            }
        }
    }

    #[test]
    fn fern_ratio_depends_only_on_the_two_sums() {
        let spec = fern(&[1, 2, 1]);
        // (x+y, x+z) equal across each pair.
        assert_eq!(fern_ratio(1, 2, 3, &spec), fern_ratio(2, 1, 2, &spec));
        assert_eq!(fern_ratio(0, 4, 1, &spec), fern_ratio(1, 3, 0, &spec));
        assert_eq!(fern_ratio(2, 2, 0, &spec), fern_ratio(0, 4, 2, &spec));
    }

    #[test]
    fn fern_cored_count_all_zero_fern() {
        let spec = fern(&[0, 0, 0]);
        for (x, y, z) in [(1, 1, 1), (2, 3, 1), (0, 2, 2)] {
            assert_eq!(
                fern_cored_count(x, y, z, &spec).unwrap(),
                macmahon_count(x, y, z)
            );
        }
    }

    #[test]
    fn fern_cored_count_envelope_scale() {
        assert_eq!(
            fern_cored_count(0, 0, 0, &fern(&[1, 1, 1])).unwrap(),
            big(2)
        );
    }
}
