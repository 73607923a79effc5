//! Partition calculus for the classical families: dual partitions, Levi
//! types of `(k, q, k)` isotropic flags, B/C/D collapses, the nilpotent
//! orbit dimension formula and codimension-2 witness orbits.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from arbitrary part order; zero parts are rejected.
    pub fn new(parts: impl IntoIterator<Item = usize>) -> Result<Partition> {
        let mut parts: Vec<usize> = parts.into_iter().collect();
        if parts.contains(&0) {
            return Err(Error::MalformedPartition("parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// `[(part, exponent), ...]` builder; zero exponents are dropped.
    pub fn from_exponents(pairs: &[(usize, usize)]) -> Result<Partition> {
        let mut parts = Vec::new();
        for &(part, exp) in pairs {
            if part == 0 && exp > 0 {
                return Err(Error::MalformedPartition("parts must be positive".into()));
            }
            parts.extend(std::iter::repeat_n(part, exp));
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transpose of the Young diagram.
    pub fn dual(&self) -> Partition {
        let rows = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=rows)
            .map(|col| self.parts.iter().filter(|&&p| p >= col).count())
            .collect();
        Partition { parts }
    }

    /// Dominance order: same total and all prefix sums at least as large.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.total() != other.total() {
            return false;
        }
        let mut a = 0usize;
        let mut b = 0usize;
        for i in 0..self.parts.len().max(other.parts.len()) {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn count_odd_parts(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// All parts even. In type D such a Jordan type labels two orbits.
    pub fn is_very_even(&self) -> bool {
        !self.parts.is_empty() && self.parts.iter().all(|&p| p % 2 == 0)
    }

    /// `[3,3,1,1,1]`
    pub fn expanded(&self) -> String {
        let items: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        format!("[{}]", items.join(","))
    }

    /// `[3^2,1^3]`; exponent 1 is left bare.
    pub fn exponent_form(&self) -> String {
        let mut items = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let part = self.parts[i];
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == part {
                j += 1;
            }
            if j - i == 1 {
                items.push(part.to_string());
            } else {
                items.push(format!("{}^{}", part, j - i));
            }
            i = j;
        }
        format!("[{}]", items.join(","))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.exponent_form())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts both expanded `[3,3,1,1,1]` and exponent `[3^2,1^3]` notation,
    /// mixed freely; brackets optional, whitespace ignored.
    fn from_str(s: &str) -> Result<Partition> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = compact
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(&compact);
        let malformed = || Error::MalformedPartition(s.trim().to_string());
        if body.is_empty() {
            return Err(malformed());
        }
        let mut parts = Vec::new();
        for item in body.split(',') {
            let (part, exp) = match item.split_once('^') {
                Some((p, e)) => (
                    p.parse::<usize>().map_err(|_| malformed())?,
                    e.parse::<usize>().map_err(|_| malformed())?,
                ),
                None => (item.parse::<usize>().map_err(|_| malformed())?, 1),
            };
            if part == 0 {
                return Err(malformed());
            }
            parts.extend(std::iter::repeat_n(part, exp));
        }
        if parts.is_empty() {
            return Err(malformed());
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

/// Classical family in its partition role: `A(n)` acts on partitions of `n`
/// (sl(n)), `B(n)` of `2n+1` (so(2n+1)), `C(n)` of `2n` (sp(2n)) and `D(n)`
/// of `2n` (so(2n)).
///
/// Ranks here go down to `n = 1`: the partition calculus is meaningful for
/// so(3), sp(2) or so(4) even though those diagrams are named differently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalFamily {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
}

impl ClassicalFamily {
    pub fn n(&self) -> usize {
        match *self {
            ClassicalFamily::A(n)
            | ClassicalFamily::B(n)
            | ClassicalFamily::C(n)
            | ClassicalFamily::D(n) => n,
        }
    }

    /// Size of the ambient matrix algebra; partitions must sum to this.
    pub fn ambient_dim(&self) -> usize {
        match *self {
            ClassicalFamily::A(n) => n,
            ClassicalFamily::B(n) => 2 * n + 1,
            ClassicalFamily::C(n) | ClassicalFamily::D(n) => 2 * n,
        }
    }

    /// Whether `p` is the Jordan type of a nilpotent element here: type B/D
    /// needs even parts with even multiplicity, type C odd parts with even
    /// multiplicity, type A anything.
    pub fn valid_jordan(&self, p: &Partition) -> bool {
        if p.total() != self.ambient_dim() {
            return false;
        }
        let bad = |part: usize| match self {
            ClassicalFamily::A(_) => false,
            ClassicalFamily::B(_) | ClassicalFamily::D(_) => part.is_multiple_of(2),
            ClassicalFamily::C(_) => part % 2 == 1,
        };
        (1..=p.parts().first().copied().unwrap_or(0))
            .filter(|&v| bad(v))
            .all(|v| p.parts().iter().filter(|&&q| q == v).count() % 2 == 0)
    }

    fn check_total(&self, p: &Partition) -> Result<()> {
        if p.total() != self.ambient_dim() {
            return Err(Error::TotalMismatch {
                family: self.to_string(),
                expected: self.ambient_dim(),
                got: p.total(),
            });
        }
        Ok(())
    }

    fn check_flag(&self, k: usize) -> Result<()> {
        // (k, q, k) with q > 0 for B and q >= 0 for C/D; in all cases
        // 1 <= k <= n.
        let n = self.n();
        if matches!(self, ClassicalFamily::A(_)) || k < 1 || k > n {
            return Err(Error::IllegalFlag {
                family: self.to_string(),
                k,
                max: n,
            });
        }
        Ok(())
    }
}

impl fmt::Display for ClassicalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ClassicalFamily::A(n) => write!(f, "sl({n})"),
            ClassicalFamily::B(n) => write!(f, "so({})", 2 * n + 1),
            ClassicalFamily::C(n) => write!(f, "sp({})", 2 * n),
            ClassicalFamily::D(n) => write!(f, "so({})", 2 * n),
        }
    }
}

impl FromStr for ClassicalFamily {
    type Err = Error;

    /// Accepts `so9`, `sp6`, `sl6` (ambient size) and `B4`, `C3`, `D5`, `A5`
    /// (rank), case-insensitively.
    fn from_str(s: &str) -> Result<ClassicalFamily> {
        let t = s.trim();
        let err = || Error::UnknownFamily(s.trim().to_string());
        let parse_num = |d: &str| d.parse::<usize>().map_err(|_| err());
        let lower = t.to_ascii_lowercase();
        let fam = if let Some(d) = lower.strip_prefix("so") {
            let m = parse_num(d)?;
            if m % 2 == 1 {
                if m < 3 {
                    return Err(err());
                }
                ClassicalFamily::B((m - 1) / 2)
            } else {
                if m < 2 {
                    return Err(err());
                }
                ClassicalFamily::D(m / 2)
            }
        } else if let Some(d) = lower.strip_prefix("sp") {
            let m = parse_num(d)?;
            if m % 2 == 1 || m < 2 {
                return Err(err());
            }
            ClassicalFamily::C(m / 2)
        } else if let Some(d) = lower
            .strip_prefix("sl")
            .or_else(|| lower.strip_prefix("gl"))
        {
            ClassicalFamily::A(parse_num(d)?)
        } else {
            let mut chars = lower.chars();
            let letter = chars.next().ok_or_else(err)?;
            let n = parse_num(chars.as_str())?;
            match letter {
                'a' => ClassicalFamily::A(n),
                'b' => ClassicalFamily::B(n),
                'c' => ClassicalFamily::C(n),
                'd' => ClassicalFamily::D(n),
                _ => return Err(err()),
            }
        };
        if fam.n() == 0 {
            return Err(err());
        }
        Ok(fam)
    }
}

/// `(k, q, k)` sorted into a partition, zero entries dropped.
pub fn ord_flag(k: usize, q: usize) -> Partition {
    Partition::new([k, q, k].into_iter().filter(|&x| x > 0)).expect("positive parts")
}

/// Levi type of the `(k, q, k)` flag: the dual partition of `ord(k, q, k)`,
/// written out by the case split
///
/// * B(n): `[3^(2n+1-2k), 2^(3k-2n-1)]` if `3k > 2n+1`, else `[3^k, 1^(2n-3k+1)]`
/// * C(n): `[3^(2n-2k), 2^(3k-2n)]` if `3k > 2n`, else `[3^k, 1^(2n-3k)]`
/// * D(n): as C for `k < n`; `[2^n]` for `k = n`.
pub fn levi_type(fam: ClassicalFamily, k: usize) -> Result<Partition> {
    fam.check_flag(k)?;
    let n = fam.n();
    let p = match fam {
        ClassicalFamily::B(_) => {
            let t = 2 * n + 1;
            if 3 * k > t {
                Partition::from_exponents(&[(3, t - 2 * k), (2, 3 * k - t)])
            } else {
                Partition::from_exponents(&[(3, k), (1, t - 3 * k)])
            }
        }
        ClassicalFamily::C(_) | ClassicalFamily::D(_) => {
            let m = 2 * n;
            if k == n {
                Partition::from_exponents(&[(2, n)])
            } else if 3 * k > m {
                Partition::from_exponents(&[(3, m - 2 * k), (2, 3 * k - m)])
            } else {
                Partition::from_exponents(&[(3, k), (1, m - 3 * k)])
            }
        }
        ClassicalFamily::A(_) => unreachable!(),
    };
    Ok(p.expect("exponents are nonnegative"))
}

/// What the parity of `k` says about the degree of the Springer map of the
/// `(k, q, k)` parabolic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegreeParity {
    DegreeOne,
    DegreeGtOne,
    /// The parity analysis does not settle this case.
    Unspecified,
}

/// Parity conditions for a degree-one Springer map:
///
/// * B(n), `3k > 2n+1`: degree one iff `k` is odd;
/// * C(n), `3k <= 2n`: degree one iff `k` is even;
/// * D(n), `n > k > 2n/3`: degree one iff `k` is even;
/// * D(n), `k = n`: degree one when `n` is odd, otherwise unresolved here;
/// * all remaining cases are degree one.
pub fn degree_one_parity(fam: ClassicalFamily, k: usize) -> Result<DegreeParity> {
    fam.check_flag(k)?;
    let n = fam.n();
    let parity = |good: bool| {
        if good {
            DegreeParity::DegreeOne
        } else {
            DegreeParity::DegreeGtOne
        }
    };
    Ok(match fam {
        ClassicalFamily::B(_) if 3 * k > 2 * n + 1 => parity(k % 2 == 1),
        ClassicalFamily::B(_) => DegreeParity::DegreeOne,
        ClassicalFamily::C(_) if 3 * k <= 2 * n => parity(k.is_multiple_of(2)),
        ClassicalFamily::C(_) => DegreeParity::DegreeOne,
        ClassicalFamily::D(_) if k == n => {
            if n % 2 == 1 {
                DegreeParity::DegreeOne
            } else {
                DegreeParity::Unspecified
            }
        }
        ClassicalFamily::D(_) if 3 * k > 2 * n => parity(k.is_multiple_of(2)),
        ClassicalFamily::D(_) => DegreeParity::DegreeOne,
        ClassicalFamily::A(_) => unreachable!(),
    })
}

/// The B/C/D collapse: the dominance-largest partition of the correct parity
/// type dominated by `p`.
///
/// Each round takes the largest wrong-parity part with odd multiplicity,
/// shrinks its last copy by one and grows the first strictly smaller part
/// (possibly a fresh zero part) by one.
pub fn collapse(fam: ClassicalFamily, p: &Partition) -> Result<Partition> {
    if matches!(fam, ClassicalFamily::A(_)) {
        return Err(Error::UnsupportedFamily(
            "collapse is defined for so/sp families only".into(),
        ));
    }
    fam.check_total(p)?;
    let mut parts = p.parts().to_vec();
    loop {
        let Some(bad) = largest_bad_part(fam, &parts) else {
            return Partition::new(parts);
        };
        // The largest wrong-parity part is never 1: wrong parts of B/D are
        // even, and in type C the odd values with odd multiplicity come in
        // pairs, so 1 is never alone.
        debug_assert!(bad >= 2);
        let i = parts.iter().rposition(|&x| x == bad).unwrap();
        parts[i] -= 1;
        match parts.iter().position(|&x| x < bad - 1) {
            Some(j) => parts[j] += 1,
            None => parts.push(1),
        }
    }
}

fn largest_bad_part(fam: ClassicalFamily, parts: &[usize]) -> Option<usize> {
    let wrong = |part: usize| match fam {
        ClassicalFamily::B(_) | ClassicalFamily::D(_) => part.is_multiple_of(2),
        ClassicalFamily::C(_) => part % 2 == 1,
        ClassicalFamily::A(_) => false,
    };
    let mut i = 0;
    while i < parts.len() {
        let part = parts[i];
        let mult = parts[i..].iter().take_while(|&&x| x == part).count();
        if wrong(part) && mult % 2 == 1 {
            return Some(part);
        }
        i += mult;
    }
    None
}

/// Dimension of the nilpotent orbit with Jordan type `jordan`, via the dual
/// partition: with `s = dual(jordan)`,
///
/// * sl(n): `n^2 - sum s_i^2`
/// * sp(2n): `2n^2 + n - (sum s_i^2)/2 - (#odd parts)/2`
/// * so(m): `(m^2 - m)/2 - (sum s_i^2)/2 + (#odd parts)/2`
pub fn orbit_dim(fam: ClassicalFamily, jordan: &Partition) -> Result<usize> {
    fam.check_total(jordan)?;
    if !fam.valid_jordan(jordan) {
        return Err(Error::InvalidPartitionType {
            family: fam.to_string(),
            partition: jordan.to_string(),
        });
    }
    let s2: usize = jordan.dual().parts().iter().map(|&x| x * x).sum();
    let odd = jordan.count_odd_parts();
    let twice = match fam {
        ClassicalFamily::A(n) => 2 * (n * n) as i64 - 2 * s2 as i64,
        ClassicalFamily::C(n) => 2 * (2 * n * n + n) as i64 - s2 as i64 - odd as i64,
        ClassicalFamily::B(_) | ClassicalFamily::D(_) => {
            let m = fam.ambient_dim() as i64;
            m * m - m - s2 as i64 + odd as i64
        }
    };
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::NonIntegerDimension {
            family: fam.to_string(),
            partition: jordan.to_string(),
        });
    }
    Ok((twice / 2) as usize)
}

/// Richardson orbit plus a codimension-2 orbit inside its closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessPair {
    pub richardson: Partition,
    pub witness: Partition,
}

/// The explicit codimension-2 orbit below the Richardson orbit of the
/// `(k, q, k)` parabolic, for the degree-one cases:
///
/// * B(n): `[3^(2n+1-2k), 2^(3k-2n-3), 1^4]` / `[3^(k-1), 2^2, 1^(2n-3k)]` /
///   `[3^(k-1), 1^3]` as `3k` is greater than / less than / equal to `2n+1`;
/// * C(n): `[3^(2n-2k), 2^(3k-2n-1), 1^2]` / `[3^(k-2), 2^4, 1^(2n-3k-2)]` /
///   `[3^(k-2), 2^3]` against `2n`;
/// * D(n), `k < n`: `[3^(2n-2k), 2^(3k-2n-2), 1^4]` / `[3^(k-1), 2^2,
///   1^(2n-3k-1)]` / `[3^(k-1), 1^3]` against `2n`.
pub fn codim2_witness(fam: ClassicalFamily, k: usize) -> Result<WitnessPair> {
    fam.check_flag(k)?;
    let out_of_scope = |reason: &str| Error::WitnessOutOfScope {
        family: fam.to_string(),
        k,
        reason: reason.into(),
    };
    match degree_one_parity(fam, k)? {
        DegreeParity::DegreeOne => {}
        DegreeParity::DegreeGtOne => {
            return Err(out_of_scope("the Springer map has degree > 1"));
        }
        DegreeParity::Unspecified => {
            return Err(out_of_scope("degree is not settled by the parity analysis"));
        }
    }
    let n = fam.n();
    let witness = match fam {
        ClassicalFamily::B(_) => {
            let t = 2 * n + 1;
            if 3 * k > t {
                Partition::from_exponents(&[(3, t - 2 * k), (2, 3 * k - t - 2), (1, 4)])
            } else if 3 * k < t {
                Partition::from_exponents(&[(3, k - 1), (2, 2), (1, t - 1 - 3 * k)])
            } else {
                Partition::from_exponents(&[(3, k - 1), (1, 3)])
            }
        }
        ClassicalFamily::C(_) => {
            let m = 2 * n;
            if 3 * k > m {
                Partition::from_exponents(&[(3, m - 2 * k), (2, 3 * k - m - 1), (1, 2)])
            } else if 3 * k < m {
                Partition::from_exponents(&[(3, k - 2), (2, 4), (1, m - 3 * k - 2)])
            } else {
                Partition::from_exponents(&[(3, k - 2), (2, 3)])
            }
        }
        ClassicalFamily::D(_) => {
            if k == n {
                return Err(out_of_scope("the k = n flag is outside this case split"));
            }
            let m = 2 * n;
            if 3 * k > m {
                Partition::from_exponents(&[(3, m - 2 * k), (2, 3 * k - m - 2), (1, 4)])
            } else if 3 * k < m {
                Partition::from_exponents(&[(3, k - 1), (2, 2), (1, m - 3 * k - 1)])
            } else {
                Partition::from_exponents(&[(3, k - 1), (1, 3)])
            }
        }
        ClassicalFamily::A(_) => unreachable!(),
    }
    .expect("witness exponents are nonnegative in the degree-one cases");
    let richardson = collapse(fam, &levi_type(fam, k)?)?;
    Ok(WitnessPair {
        richardson,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_both_notations() {
        assert_eq!(p("[3,3,1,1,1]"), p("[3^2,1^3]"));
        assert_eq!(p("3^2, 1^3"), p("[3,3,1,1,1]"));
        assert_eq!(p("[3^2,1,1,1]").parts(), &[3, 3, 1, 1, 1]);
        assert_eq!(p("[1,3]").parts(), &[3, 1]);
        assert!("[]".parse::<Partition>().is_err());
        assert!("[0]".parse::<Partition>().is_err());
        assert!("[3^0]".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(p("[3^2,1^3]").expanded(), "[3,3,1,1,1]");
        assert_eq!(p("[3,3,1,1,1]").exponent_form(), "[3^2,1^3]");
        assert_eq!(p("[3,2,2]").exponent_form(), "[3,2^2]");
    }

    #[test]
    fn dual_examples() {
        assert_eq!(p("[3,3,1,1,1]").dual(), p("[5,2,2]"));
        assert_eq!(p("[1]").dual(), p("[1]"));
        assert_eq!(p("[4,2,1]").dual(), p("[3,2,1,1]"));
    }

    #[test]
    fn family_parsing() {
        assert_eq!(
            "so9".parse::<ClassicalFamily>().unwrap(),
            ClassicalFamily::B(4)
        );
        assert_eq!(
            "so10".parse::<ClassicalFamily>().unwrap(),
            ClassicalFamily::D(5)
        );
        assert_eq!(
            "sp6".parse::<ClassicalFamily>().unwrap(),
            ClassicalFamily::C(3)
        );
        assert_eq!(
            "sl6".parse::<ClassicalFamily>().unwrap(),
            ClassicalFamily::A(6)
        );
        assert_eq!(
            "B4".parse::<ClassicalFamily>().unwrap(),
            ClassicalFamily::B(4)
        );
        assert_eq!(
            "d5".parse::<ClassicalFamily>().unwrap(),
            ClassicalFamily::D(5)
        );
        assert!("sp7".parse::<ClassicalFamily>().is_err());
        assert!("so1".parse::<ClassicalFamily>().is_err());
        assert!("x4".parse::<ClassicalFamily>().is_err());
    }

    #[test]
    fn levi_type_cases() {
        assert_eq!(levi_type(ClassicalFamily::B(4), 2).unwrap(), p("[3^2,1^3]"));
        assert_eq!(levi_type(ClassicalFamily::C(3), 3).unwrap(), p("[2,2,2]"));
        assert_eq!(levi_type(ClassicalFamily::D(5), 5).unwrap(), p("[2^5]"));
        assert_eq!(levi_type(ClassicalFamily::B(5), 5).unwrap(), p("[3,2^4]"));
        assert!(levi_type(ClassicalFamily::B(4), 5).is_err());
        assert!(levi_type(ClassicalFamily::A(4), 1).is_err());
        assert!(levi_type(ClassicalFamily::B(4), 0).is_err());
    }

    #[test]
    fn parity_cases() {
        use ClassicalFamily::*;
        use DegreeParity::*;
        assert_eq!(degree_one_parity(B(4), 4).unwrap(), DegreeGtOne);
        assert_eq!(
            degree_one_parity(B(4), 5).unwrap_err().kind(),
            "illegal-flag"
        );
        assert_eq!(degree_one_parity(B(4), 2).unwrap(), DegreeOne);
        assert_eq!(degree_one_parity(C(6), 4).unwrap(), DegreeOne);
        assert_eq!(degree_one_parity(C(6), 3).unwrap(), DegreeGtOne);
        assert_eq!(degree_one_parity(C(3), 3).unwrap(), DegreeOne);
        assert_eq!(degree_one_parity(D(5), 4).unwrap(), DegreeOne);
        assert_eq!(degree_one_parity(D(6), 5).unwrap(), DegreeGtOne);
        assert_eq!(degree_one_parity(D(5), 5).unwrap(), DegreeOne);
        assert_eq!(degree_one_parity(D(6), 6).unwrap(), Unspecified);
    }

    #[test]
    fn collapse_examples() {
        let b4 = ClassicalFamily::B(4);
        assert_eq!(collapse(b4, &p("[3^2,1^3]")).unwrap(), p("[3^2,1^3]"));
        let c3 = ClassicalFamily::C(3);
        assert_eq!(collapse(c3, &p("[3,1,1,1]")).unwrap(), p("[2,2,1,1]"));
        assert_eq!(collapse(c3, &p("[2,2,2]")).unwrap(), p("[2,2,2]"));
        // so(11): two rounds are needed.
        let b5 = ClassicalFamily::B(5);
        assert_eq!(collapse(b5, &p("[4,3,3,1]")).unwrap(), p("[3,3,3,1,1]"));
        assert!(collapse(c3, &p("[3,1,1]")).is_err());
        assert!(collapse(ClassicalFamily::A(6), &p("[3,3]")).is_err());
    }

    #[test]
    fn orbit_dim_examples() {
        assert_eq!(
            orbit_dim(ClassicalFamily::B(4), &p("[3^2,1^3]")).unwrap(),
            22
        );
        assert_eq!(
            orbit_dim(ClassicalFamily::B(4), &p("[3,2^2,1^2]")).unwrap(),
            20
        );
        assert_eq!(orbit_dim(ClassicalFamily::C(3), &p("[2^3]")).unwrap(), 12);
        assert_eq!(
            orbit_dim(ClassicalFamily::A(6), &p("[2^2,1^2]")).unwrap(),
            16
        );
        for fam in [
            ClassicalFamily::A(5),
            ClassicalFamily::B(2),
            ClassicalFamily::C(2),
            ClassicalFamily::D(2),
        ] {
            let ones = Partition::from_exponents(&[(1, fam.ambient_dim())]).unwrap();
            assert_eq!(orbit_dim(fam, &ones).unwrap(), 0);
        }
        // [3,2,2,1,1] is not a type-C Jordan type (odd part 3 has odd multiplicity).
        assert!(matches!(
            orbit_dim(ClassicalFamily::C(4), &p("[3,2,2,1]")),
            Err(Error::InvalidPartitionType { .. })
        ));
    }

    #[test]
    fn witness_examples() {
        let w = codim2_witness(ClassicalFamily::B(4), 2).unwrap();
        assert_eq!(w.richardson, p("[3^2,1^3]"));
        assert_eq!(w.witness, p("[3,2^2,1^2]"));

        let w = codim2_witness(ClassicalFamily::C(6), 4).unwrap();
        assert_eq!(w.richardson, p("[3^4]"));
        assert_eq!(w.witness, p("[3^2,2^3]"));

        assert!(codim2_witness(ClassicalFamily::C(6), 3).is_err());
        assert!(codim2_witness(ClassicalFamily::D(5), 5).is_err());
        assert!(codim2_witness(ClassicalFamily::D(6), 6).is_err());
    }

    #[test]
    fn dominance_basics() {
        assert!(p("[3,1]").dominates(&p("[2,2]")));
        assert!(!p("[2,2]").dominates(&p("[3,1]")));
        assert!(p("[2,2]").dominates(&p("[2,2]")));
        assert!(!p("[3,1]").dominates(&p("[3,1,1]")));
    }
}
