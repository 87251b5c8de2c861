//! Closed-form tiling counts as quotients of hyperfactorials.

use num_bigint::BigUint;
use num_rational::BigRational;

use super::factored::{hyperfactorial_factored, Factored};
use super::halfint::HalfInt;
use super::asymptotics::ln_hyperfactorial;
use super::value::SqrtPiScaled;
use crate::error::ArithError;
use crate::lattice::{check_hexagon_sides, Family, RegionSpec};

/// `prod H(num) / prod H(den)`, kept symbolic until evaluated.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HyperQuotient {
    pub num: Vec<HalfInt>,
    pub den: Vec<HalfInt>,
}

impl HyperQuotient {
    pub fn new() -> Self {
        HyperQuotient::default()
    }

    fn up(&mut self, args: impl IntoIterator<Item = HalfInt>) -> &mut Self {
        self.num.extend(args);
        self
    }

    fn down(&mut self, args: impl IntoIterator<Item = HalfInt>) -> &mut Self {
        self.den.extend(args);
        self
    }

    /// Multiplies in another quotient raised to `power` (which may be negative).
    pub fn mul_pow(&mut self, other: &HyperQuotient, power: i32) {
        for _ in 0..power.unsigned_abs() {
            if power > 0 {
                self.num.extend(&other.num);
                self.den.extend(&other.den);
            } else {
                self.num.extend(&other.den);
                self.den.extend(&other.num);
            }
        }
    }

    pub fn factored(&self) -> Result<Factored, ArithError> {
        let mut acc = Factored::one();
        for &n in &self.num {
            acc.mul_pow(&hyperfactorial_factored(n)?, 1);
        }
        for &d in &self.den {
            acc.mul_pow(&hyperfactorial_factored(d)?, -1);
        }
        Ok(acc)
    }

    pub fn evaluate(&self) -> Result<SqrtPiScaled, ArithError> {
        Ok(self.factored()?.to_value())
    }

    /// Exact value, which must be a non-negative integer.
    pub fn to_integer(&self, what: &str) -> Result<BigUint, ArithError> {
        let f = self.factored()?;
        if !f.is_integer() {
            return Err(ArithError::NotInteger { what: what.to_string(), value: f.to_value().to_string() });
        }
        Ok(f.to_value().to_biguint().expect("integral factorization"))
    }

    /// The same quotient with arguments common to numerator and
    /// denominator removed.
    pub fn reduced(&self) -> HyperQuotient {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        num.sort_unstable();
        den.sort_unstable();
        let (mut out_num, mut out_den) = (Vec::new(), Vec::new());
        let (mut i, mut j) = (0, 0);
        while i < num.len() && j < den.len() {
            match num[i].cmp(&den[j]) {
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
                std::cmp::Ordering::Less => {
                    out_num.push(num[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out_den.push(den[j]);
                    j += 1;
                }
            }
        }
        out_num.extend_from_slice(&num[i..]);
        out_den.extend_from_slice(&den[j..]);
        HyperQuotient { num: out_num, den: out_den }
    }

    /// Natural log, computed in floating point after cancelling common
    /// arguments.
    pub fn ln(&self) -> Result<f64, ArithError> {
        let q = self.reduced();
        let mut acc = 0.0;
        for &n in &q.num {
            acc += ln_hyperfactorial(n)?;
        }
        for &d in &q.den {
            acc -= ln_hyperfactorial(d)?;
        }
        Ok(acc)
    }
}

fn h<T: Into<HalfInt>>(v: T) -> HalfInt {
    v.into()
}

fn hi(v: u32) -> HalfInt {
    HalfInt::int(v as i64)
}

/// `P(a,b,c) = H(a)H(b)H(c)H(a+b+c) / (H(a+b)H(a+c)H(b+c))`.
pub fn macmahon_quotient(a: u32, b: u32, c: u32) -> HyperQuotient {
    let mut q = HyperQuotient::new();
    q.up([a, b, c, a + b + c].map(hi)).down([a + b, a + c, b + c].map(hi));
    q
}

/// Number of plane partitions in an `a x b x c` box.
pub fn macmahon_p(a: u32, b: u32, c: u32) -> BigUint {
    macmahon_quotient(a, b, c).to_integer("P(a,b,c)").expect("MacMahon's formula is integral")
}

/// Parity pattern of `(x, y, z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Same,
    XOdd,
    YOdd,
    ZOdd,
}

pub fn parity(x: u32, y: u32, z: u32) -> Parity {
    match (x % 2 == y % 2, y % 2 == z % 2) {
        (true, true) => Parity::Same,
        (false, true) => Parity::XOdd,
        (false, false) => Parity::YOdd,
        (true, false) => Parity::ZOdd,
    }
}

/// Right-hand side of the S-cored count when `x, y, z` share parity.
///
/// Every printed factor is kept, including the `H(ceil(x/2))` whose closing
/// delimiter is missing in print.
pub fn sc_same_parity_quotient(x: u32, y: u32, z: u32, a: u32, b: u32, c: u32, m: u32) -> HyperQuotient {
    let s = (m + a + b + c) as i64;
    let hs = HalfInt::half(s);
    let xy = HalfInt::half((x + y) as i64);
    let xz = HalfInt::half((x + z) as i64);
    let yz = HalfInt::half((y + z) as i64);
    let t = HalfInt::half((x + y + z) as i64);
    let (x2, y2, z2) = (HalfInt::half(x as i64), HalfInt::half(y as i64), HalfInt::half(z as i64));
    let (m, a, b, c) = (m as i64, a as i64, b as i64, c as i64);
    let (xi, yi, zi) = (x as i64, y as i64, z as i64);

    let mut q = HyperQuotient::new();
    q.up([h(m), h(m), h(m), h(a), h(b), h(c)]).down([h(m + a), h(m + b), h(m + c)]);
    q.up([xy + (m + a + b), xz + (m + a + c), yz + (m + b + c)])
        .down([xy + (m + c), xz + (m + b), yz + (m + a)]);
    q.up([xy + c, xz + b, yz + a]).down([xy + (a + b), xz + (a + c), yz + (b + c)]);
    q.up([h(xi + s), h(yi + s)]).down([h(xi + yi + s), h(xi + zi + s)]);
    q.up([h(zi + s), h(xi + yi + zi + s)]).down([h(yi + zi + s)]);
    q.up([t.ceil() + s, t.floor() + s]).down([xy + s, xz + s, yz + s]);
    q.up([x2.ceil(), x2.floor(), y2.ceil()]).down([x2.ceil() + hs, x2.floor() + hs, y2.ceil() + hs]);
    q.up([y2.floor(), z2.ceil(), z2.floor()]).down([y2.floor() + hs, z2.ceil() + hs, z2.floor() + hs]);
    q.up([hs, hs, xy + hs, xy + hs, xz + hs, xz + hs, yz + hs, yz + hs])
        .down([t.ceil() + hs, t.floor() + hs, xy, xz, yz]);
    q
}

/// Right-hand side of the S-cored count when `x` has the parity not shared
/// by `y` and `z`.
///
/// The printed `H(ceil(y/2) + (m+a+b+c)/2` is read as
/// `H(ceil(y/2) + (m+a+b+c)/2)`.
pub fn sc_mixed_parity_quotient(x: u32, y: u32, z: u32, a: u32, b: u32, c: u32, m: u32) -> HyperQuotient {
    let s = (m + a + b + c) as i64;
    let hs = HalfInt::half(s);
    let xy = HalfInt::half((x + y) as i64);
    let xz = HalfInt::half((x + z) as i64);
    let yz = HalfInt::half((y + z) as i64);
    let t = HalfInt::half((x + y + z) as i64);
    let (x2, y2, z2) = (HalfInt::half(x as i64), HalfInt::half(y as i64), HalfInt::half(z as i64));
    let (m, a, b, c) = (m as i64, a as i64, b as i64, c as i64);
    let (xi, yi, zi) = (x as i64, y as i64, z as i64);

    let mut q = HyperQuotient::new();
    q.up([h(m), h(m), h(m), h(a), h(b), h(c)]).down([h(m + a), h(m + b), h(m + c)]);
    q.up([xy.floor() + (m + a + b), xz.ceil() + (m + a + c), yz + (m + b + c)])
        .down([xy.ceil() + (m + c), xz.floor() + (m + b), yz + (m + a)]);
    q.up([xy.ceil() + c, xz.floor() + b, yz + a])
        .down([xy.floor() + (a + b), xz.ceil() + (a + c), yz + (b + c)]);
    q.up([h(xi + s), h(yi + s)]).down([h(xi + yi + s), h(xi + zi + s)]);
    q.up([h(zi + s), h(xi + yi + zi + s)]).down([h(yi + zi + s)]);
    q.up([t.ceil() + s, t.floor() + s]).down([xy.floor() + s, xz.ceil() + s, yz + s]);
    q.up([x2.ceil(), x2.floor(), y2.ceil()]).down([x2.ceil() + hs, x2.floor() + hs, y2.ceil() + hs]);
    q.up([y2.floor(), z2.ceil(), z2.floor()]).down([y2.floor() + hs, z2.ceil() + hs, z2.floor() + hs]);
    q.up([hs, hs, xy.ceil() + hs, xy.floor() + hs]).down([t.ceil() + hs, t.floor() + hs, xy.ceil()]);
    q.up([xz.ceil() + hs, xz.floor() + hs, yz + hs, yz + hs]).down([xz.floor(), yz]);
    q
}

/// The quotient `R_{x,y,z}(a,b,c,m)` used by the condensation identities:
/// the equal-parity expression or the `x`-odd expression. Other parity
/// patterns are rejected.
pub fn r_quotient(x: u32, y: u32, z: u32, a: u32, b: u32, c: u32, m: u32) -> Result<HyperQuotient, ArithError> {
    match parity(x, y, z) {
        Parity::Same => Ok(sc_same_parity_quotient(x, y, z, a, b, c, m)),
        Parity::XOdd => Ok(sc_mixed_parity_quotient(x, y, z, a, b, c, m)),
        _ => Err(ArithError::Parity { what: "R", x, y, z }),
    }
}

/// The closed form for `SC_{x,y,z}(a,b,c,m)` for any parity pattern.
///
/// When `y` or `z` is the odd one out the region is a 120 degree rotation of
/// an `x`-odd one: `SC_{x,y,z}(a,b,c,m)` with `y` odd is congruent to
/// `SC_{y,z,x}(b,c,a,m)`, and with `z` odd to `SC_{z,x,y}(c,a,b,m)`.
pub fn sc_quotient(x: u32, y: u32, z: u32, a: u32, b: u32, c: u32, m: u32) -> HyperQuotient {
    match parity(x, y, z) {
        Parity::Same => sc_same_parity_quotient(x, y, z, a, b, c, m),
        Parity::XOdd => sc_mixed_parity_quotient(x, y, z, a, b, c, m),
        Parity::YOdd => sc_mixed_parity_quotient(y, z, x, b, c, a, m),
        Parity::ZOdd => sc_mixed_parity_quotient(z, x, y, c, a, b, m),
    }
}

pub fn sc_formula(x: u32, y: u32, z: u32, a: u32, b: u32, c: u32, m: u32) -> Result<BigUint, ArithError> {
    sc_quotient(x, y, z, a, b, c, m).to_integer("SC formula")
}

pub fn cored_formula(x: u32, y: u32, z: u32, m: u32) -> Result<BigUint, ArithError> {
    sc_formula(x, y, z, 0, 0, 0, m)
}

pub fn magnet_bar_quotient(x: u32, y: u32, a: u32, b: u32, c: u32, m: u32) -> HyperQuotient {
    let mut q = HyperQuotient::new();
    q.up([m, m, a, b, c, m + a + b + c].map(hi)).down([m + a, m + b, m + c].map(hi));
    q.up([x + m + a + c, y + m + b + c].map(hi)).down([hi(x + y + m + c)]);
    q.up([hi(x + y + c)]).down([x + a + c, y + b + c].map(hi));
    q.up([hi(x + y + m + a + b + c)]).down([x + m + a + b + c, y + m + a + b + c].map(hi));
    q.up([x, y].map(hi)).down([hi(x + y)]);
    q
}

pub fn magnet_bar_formula(x: u32, y: u32, a: u32, b: u32, c: u32, m: u32) -> Result<BigUint, ArithError> {
    magnet_bar_quotient(x, y, a, b, c, m).to_integer("magnet bar formula")
}

/// Closed form for a hexagon given by its six sides; zero unless the
/// hexagon is balanced, i.e. of the form `a, b, c, a, b, c`.
pub fn hexagon_formula(sides: [u32; 6]) -> BigUint {
    let [s1, s2, s3, s4, s5, s6] = sides;
    if s1 == s4 && s2 == s5 && s3 == s6 {
        macmahon_p(s1, s2, s3)
    } else {
        BigUint::default()
    }
}

pub fn shamrock_ratio_quotient(a: u32, b: u32, c: u32, m: u32) -> HyperQuotient {
    let mut q = HyperQuotient::new();
    q.up([a, b, c, a + b + c + m, m, m].map(hi)).down([a + m, b + m, c + m, a + b + c].map(hi));
    q
}

/// Limiting ratio of tiling counts of the exteriors of the shamrocks
/// `S(a,b,c,m)` and `S(a+b+c,0,0,m)`.
pub fn shamrock_ratio(a: u32, b: u32, c: u32, m: u32) -> Result<BigRational, ArithError> {
    let v = shamrock_ratio_quotient(a, b, c, m).evaluate()?;
    if v.k() != 0 {
        return Err(ArithError::NotInteger { what: "shamrock ratio".into(), value: v.to_string() });
    }
    Ok(v.q().clone())
}

/// `(P(a,b,m), P(a+b,c,m))`, whose product is [`shamrock_ratio`].
pub fn shamrock_ratio_factored(a: u32, b: u32, c: u32, m: u32) -> (BigUint, BigUint) {
    (macmahon_p(a, b, m), macmahon_p(a + b, c, m))
}

/// For `m = a+b+c`: `(P(a,b,c), P(a+b,b+c,c+a))`.
pub fn shamrock_ratio_symmetric(a: u32, b: u32, c: u32) -> (BigUint, BigUint) {
    (macmahon_p(a, b, c), macmahon_p(a + b, b + c, c + a))
}

/// Closed-form count for a named region.
pub fn formula_for(spec: &RegionSpec) -> Result<BigUint, ArithError> {
    let p = &spec.params;
    match spec.family {
        Family::Hexagon => {
            let sides = [p[0], p[1], p[2], p[3], p[4], p[5]];
            check_hexagon_sides(sides)?;
            Ok(hexagon_formula(sides))
        }
        Family::CoredHexagon => cored_formula(p[0], p[1], p[2], p[3]),
        Family::SCoredHexagon => sc_formula(p[0], p[1], p[2], p[3], p[4], p[5], p[6]),
        Family::MagnetBar => magnet_bar_formula(p[0], p[1], p[2], p[3], p[4], p[5]),
        Family::ShamrockHole => Err(ArithError::NoClosedForm(spec.family.name())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn p(a: u32, b: u32, c: u32) -> u64 {
        macmahon_p(a, b, c).to_u64().unwrap()
    }

    /// Plane partitions in an a x b x c box by direct enumeration of
    /// weakly decreasing arrays.
    fn plane_partitions(a: usize, b: usize, c: u32) -> u64 {
        fn go(cells: &mut Vec<u32>, a: usize, b: usize, c: u32, k: usize) -> u64 {
            if k == a * b {
                return 1;
            }
            let (r, col) = (k / b, k % b);
            let mut cap = c;
            if r > 0 {
                cap = cap.min(cells[k - b]);
            }
            if col > 0 {
                cap = cap.min(cells[k - 1]);
            }
            let mut total = 0;
            for v in 0..=cap {
                cells[k] = v;
                total += go(cells, a, b, c, k + 1);
            }
            total
        }
        go(&mut vec![0; a * b], a, b, c, 0)
    }

    #[test]
    fn macmahon_against_plane_partitions() {
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    assert_eq!(p(a, b, c), plane_partitions(a as usize, b as usize, c), "{a} {b} {c}");
                }
            }
        }
        assert_eq!(p(1, 1, 1), 2);
        assert_eq!(p(2, 2, 2), 20);
        assert_eq!(p(3, 4, 0), 1);
    }

    #[test]
    fn macmahon_symmetric() {
        for (a, b, c) in [(1, 2, 3), (4, 0, 2), (5, 3, 3)] {
            let v = p(a, b, c);
            for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                assert_eq!(p(x, y, z), v);
            }
        }
    }

    #[test]
    fn sc_reduces_to_hexagon() {
        for x in 0..6 {
            for y in 0..6 {
                for z in 0..6 {
                    assert_eq!(sc_formula(x, y, z, 0, 0, 0, 0).unwrap(), macmahon_p(x, y, z), "{x} {y} {z}");
                }
            }
        }
    }

    #[test]
    fn sc_three_hexagons() {
        assert_eq!(sc_formula(0, 0, 0, 1, 1, 1, 1).unwrap(), BigUint::from(8u32));
        for (a, b, c, m) in [(3, 4, 6, 2), (1, 2, 0, 3), (2, 2, 2, 0)] {
            let want = macmahon_p(a, b, m) * macmahon_p(a, c, m) * macmahon_p(b, c, m);
            assert_eq!(sc_formula(0, 0, 0, a, b, c, m).unwrap(), want);
        }
    }

    #[test]
    fn magnet_bar_examples() {
        assert_eq!(magnet_bar_formula(0, 0, 0, 0, 0, 0).unwrap(), BigUint::from(1u32));
        assert_eq!(magnet_bar_formula(0, 1, 1, 1, 1, 1).unwrap(), BigUint::from(6u32));
        for (y, a, b, c, m) in [(2, 1, 3, 2, 1), (0, 2, 2, 2, 2), (3, 0, 1, 4, 2)] {
            assert_eq!(magnet_bar_formula(0, y, a, b, c, m).unwrap(), macmahon_p(a, c, m) * macmahon_p(b, y + c, m));
        }
    }

    #[test]
    fn shamrock_ratio_examples() {
        for m in 0..5 {
            assert_eq!(shamrock_ratio(0, 0, 0, m).unwrap(), BigRational::from_integer(1.into()));
        }
        assert_eq!(shamrock_ratio(1, 1, 0, 1).unwrap(), BigRational::from_integer(2.into()));
        let (l, r) = shamrock_ratio_factored(1, 1, 0, 1);
        assert_eq!((l.to_u64(), r.to_u64()), (Some(2), Some(1)));
        assert_eq!(shamrock_ratio(1, 1, 1, 3).unwrap(), BigRational::from_integer(40.into()));
        let (l, r) = shamrock_ratio_symmetric(1, 1, 1);
        assert_eq!(l * r, BigUint::from(40u32));
    }

    #[test]
    fn parity_patterns() {
        assert_eq!(parity(2, 4, 0), Parity::Same);
        assert_eq!(parity(1, 3, 5), Parity::Same);
        assert_eq!(parity(1, 2, 2), Parity::XOdd);
        assert_eq!(parity(2, 1, 2), Parity::YOdd);
        assert_eq!(parity(2, 2, 1), Parity::ZOdd);
        assert!(r_quotient(2, 1, 2, 0, 0, 0, 1).is_err());
    }

    #[test]
    fn log_matches_exact() {
        let q = sc_quotient(3, 4, 2, 1, 0, 2, 1);
        let exact = q.evaluate().unwrap().to_f64().ln();
        assert!((q.ln().unwrap() - exact).abs() < 1e-9);
    }
}
