//! Exact arithmetic in the coefficient field K = Q(q,t).
//!
//! A [`QtRational`] is a ratio of two integer-coefficient polynomials in q
//! and t, kept in canonical form:
//! - gcd(numerator, denominator) = 1 (including integer content),
//! - the denominator has positive leading coefficient in lex order (q, then t),
//! - the zero value is stored as 0/1.
//!
//! Canonical form makes equality structural, which every identity check in
//! this crate relies on. All arithmetic is exact; there is no floating point.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse integer polynomial in q and t. Keys are (deg_q, deg_t); zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QtPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl QtPoly {
    pub fn zero() -> Self {
        QtPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        QtPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        QtPoly { terms }
    }

    pub fn monomial(c: BigInt, dq: u32, dt: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((dq, dt), c);
        }
        QtPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).map_or(false, |c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    fn insert_add(&mut self, key: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_add(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_add(*k, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        QtPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = QtPoly::zero();
        for ((aq, at), ac) in &self.terms {
            for ((bq, bt), bc) in &other.terms {
                out.insert_add((aq + bq, at + bt), ac * bc);
            }
        }
        out
    }

    pub fn mul_monomial(&self, c: &BigInt, dq: u32, dt: u32) -> Self {
        QtPoly {
            terms: self
                .terms
                .iter()
                .map(|((a, b), v)| ((a + dq, b + dt), v * c))
                .collect(),
        }
    }

    /// Leading term under lex order with q > t.
    fn lead(&self) -> Option<(&(u32, u32), &BigInt)> {
        self.terms.iter().next_back()
    }

    fn lead_coeff_positive(&self) -> bool {
        self.lead().map_or(true, |(_, c)| c.is_positive())
    }

    /// gcd of all integer coefficients (non-negative).
    fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Componentwise minimum of exponents over all terms.
    fn monomial_content(&self) -> (u32, u32) {
        let mut mq = u32::MAX;
        let mut mt = u32::MAX;
        for (dq, dt) in self.terms.keys() {
            mq = mq.min(*dq);
            mt = mt.min(*dt);
        }
        (mq, mt)
    }

    fn div_int_exact(&self, d: &BigInt) -> Self {
        QtPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    let (val, rem) = c.div_rem(d);
                    debug_assert!(rem.is_zero());
                    (*k, val)
                })
                .collect(),
        }
    }

    fn div_monomial_exact(&self, dq: u32, dt: u32) -> Self {
        QtPoly {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((a - dq, b - dt), c.clone()))
                .collect(),
        }
    }

    /// Exact polynomial division; panics if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return QtPoly::zero();
        }
        let a = RecPoly::from_qt(self);
        let b = RecPoly::from_qt(other);
        a.div_exact(&b).to_qt()
    }

    /// gcd with positive leading coefficient; gcd(0,0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return if other.lead_coeff_positive() {
                other.clone()
            } else {
                other.neg()
            };
        }
        if other.is_zero() {
            return if self.lead_coeff_positive() {
                self.clone()
            } else {
                self.neg()
            };
        }
        let ca = self.int_content();
        let cb = other.int_content();
        let (qa, ta) = self.monomial_content();
        let (qb, tb) = other.monomial_content();
        let cg = ca.gcd(&cb);
        let (qg, tg) = (qa.min(qb), ta.min(tb));

        let pa = self.div_int_exact(&ca).div_monomial_exact(qa, ta);
        let pb = other.div_int_exact(&cb).div_monomial_exact(qb, tb);

        let ra = RecPoly::from_qt(&pa);
        let rb = RecPoly::from_qt(&pb);
        let core = RecPoly::gcd(ra, rb);
        let mut g = core.to_qt().mul_monomial(&cg, qg, tg);
        if !g.lead_coeff_positive() {
            g = g.neg();
        }
        g
    }

    /// Map (deg_q, deg_t) -> (eq * deg_q, et * deg_t); exponents may go
    /// negative, so the result is returned with i64 keys for the caller to
    /// shift back into polynomial range.
    fn subst_exponents(&self, eq: i64, et: i64) -> Vec<((i64, i64), BigInt)> {
        self.terms
            .iter()
            .map(|((a, b), c)| ((eq * *a as i64, et * *b as i64), c.clone()))
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Dense univariate machinery used only for gcd / exact division internals.
// ---------------------------------------------------------------------------

/// Dense polynomial in t over Z; coefficients ascending, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
struct TPoly(Vec<BigInt>);

impl TPoly {
    fn zero() -> Self {
        TPoly(Vec::new())
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn trim(mut v: Vec<BigInt>) -> Self {
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
        TPoly(v)
    }

    fn deg(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.0.len() - 1
    }

    fn lead(&self) -> &BigInt {
        self.0.last().expect("lead of zero polynomial")
    }

    fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let mut v = vec![BigInt::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            v[i] += c;
        }
        TPoly::trim(v)
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let mut v = vec![BigInt::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            v[i] -= c;
        }
        TPoly::trim(v)
    }

    fn neg(&self) -> Self {
        TPoly(self.0.iter().map(|c| -c).collect())
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        TPoly::trim(v)
    }

    fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_int_exact(&self, d: &BigInt) -> Self {
        TPoly(
            self.0
                .iter()
                .map(|c| {
                    let (v, r) = c.div_rem(d);
                    debug_assert!(r.is_zero());
                    v
                })
                .collect(),
        )
    }

    /// Exact division; panics on inexact division.
    fn div_exact(&self, other: &Self) -> Self {
        assert!(!other.is_zero());
        if self.is_zero() {
            return TPoly::zero();
        }
        let mut r = self.0.clone();
        let db = other.deg();
        let lb = other.lead();
        assert!(r.len() >= db + 1, "inexact polynomial division");
        let mut q = vec![BigInt::zero(); r.len() - db];
        for i in (db..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let (c, rem) = r[i].div_rem(lb);
            assert!(rem.is_zero(), "inexact polynomial division");
            for (j, b) in other.0.iter().enumerate() {
                let idx = i - db + j;
                r[idx] -= &c * b;
            }
            q[i - db] = c;
        }
        assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
        TPoly::trim(q)
    }

    /// Primitive gcd in Z[t] with positive leading coefficient.
    fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.sign_normalized();
        }
        if b.is_zero() {
            return a.sign_normalized();
        }
        let ca = a.int_content();
        let cb = b.int_content();
        let cg = ca.gcd(&cb);
        let mut x = a.div_int_exact(&ca);
        let mut y = b.div_int_exact(&cb);
        loop {
            if y.is_zero() {
                let mut g = x.sign_normalized();
                let c = g.int_content();
                g = g.div_int_exact(&c);
                for coef in g.0.iter_mut() {
                    *coef *= &cg;
                }
                return g;
            }
            if x.is_zero() || x.deg() < y.deg() {
                std::mem::swap(&mut x, &mut y);
                continue;
            }
            // pseudo-remainder of x by y
            let mut r = x.clone();
            let lb = y.lead().clone();
            while !r.is_zero() && r.deg() >= y.deg() {
                let shift = r.deg() - y.deg();
                let lr = r.lead().clone();
                let mut scaled = vec![BigInt::zero(); r.0.len()];
                for (i, c) in r.0.iter().enumerate() {
                    scaled[i] = c * &lb;
                }
                for (j, c) in y.0.iter().enumerate() {
                    scaled[j + shift] -= &lr * c;
                }
                r = TPoly::trim(scaled);
            }
            if !r.is_zero() {
                let c = r.int_content();
                r = r.div_int_exact(&c);
            }
            x = y;
            y = r;
        }
    }

    fn sign_normalized(&self) -> Self {
        if self.0.last().map_or(false, |c| c.is_negative()) {
            self.neg()
        } else {
            self.clone()
        }
    }
}

/// Polynomial in q with dense TPoly coefficients; index = q-degree.
#[derive(Clone, Debug)]
struct RecPoly(Vec<TPoly>);

impl RecPoly {
    fn from_qt(p: &QtPoly) -> Self {
        let dq = p.terms.keys().map(|(a, _)| *a).max().unwrap_or(0) as usize;
        let mut coeffs = vec![Vec::new(); dq + 1];
        for ((a, b), c) in &p.terms {
            let v = &mut coeffs[*a as usize];
            if v.len() <= *b as usize {
                v.resize(*b as usize + 1, BigInt::zero());
            }
            v[*b as usize] = c.clone();
        }
        RecPoly::trim(coeffs.into_iter().map(TPoly::trim).collect())
    }

    fn to_qt(&self) -> QtPoly {
        let mut out = QtPoly::zero();
        for (a, tp) in self.0.iter().enumerate() {
            for (b, c) in tp.0.iter().enumerate() {
                if !c.is_zero() {
                    out.terms.insert((a as u32, b as u32), c.clone());
                }
            }
        }
        out
    }

    fn trim(mut v: Vec<TPoly>) -> Self {
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
        RecPoly(v)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn deg(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.0.len() - 1
    }

    fn lead(&self) -> &TPoly {
        self.0.last().expect("lead of zero polynomial")
    }

    /// content in Z[t]: gcd of all coefficients.
    fn content(&self) -> TPoly {
        let mut g = TPoly::zero();
        for c in &self.0 {
            g = TPoly::gcd(&g, c);
        }
        g
    }

    fn primitive(self) -> Self {
        if self.is_zero() {
            return self;
        }
        let c = self.content();
        let mut out: Vec<TPoly> = self.0.iter().map(|x| x.div_exact(&c)).collect();
        if out.last().map_or(false, |l| l.lead().is_negative()) {
            out = out.iter().map(TPoly::neg).collect();
        }
        RecPoly(out)
    }

    /// Primitive gcd of two primitive polynomials in q over Z[t].
    fn gcd(a: RecPoly, b: RecPoly) -> RecPoly {
        let ca = a.content();
        let cb = b.content();
        let cg = TPoly::gcd(&ca, &cb);
        let mut x = a.primitive();
        let mut y = b.primitive();
        loop {
            if y.is_zero() {
                let core = x.primitive();
                let out: Vec<TPoly> = core.0.iter().map(|c| c.mul(&cg)).collect();
                return RecPoly(out);
            }
            if x.is_zero() || x.deg() < y.deg() {
                std::mem::swap(&mut x, &mut y);
                continue;
            }
            let r = RecPoly::prem(&x, &y);
            x = y;
            y = r.primitive();
        }
    }

    /// Pseudo-remainder: repeatedly scale by lead(b) and cancel the top term.
    fn prem(a: &RecPoly, b: &RecPoly) -> RecPoly {
        let db = b.deg();
        let lb = b.lead().clone();
        let mut r = a.clone();
        while !r.is_zero() && r.deg() >= db {
            let dr = r.deg();
            let lr = r.lead().clone();
            let mut next: Vec<TPoly> = r.0.iter().map(|c| c.mul(&lb)).collect();
            for (j, c) in b.0.iter().enumerate() {
                next[j + dr - db] = next[j + dr - db].sub(&c.mul(&lr));
            }
            r = RecPoly::trim(next);
        }
        r
    }

    fn div_exact(&self, b: &RecPoly) -> RecPoly {
        if self.is_zero() {
            return RecPoly(Vec::new());
        }
        let db = b.deg();
        let mut r = self.clone();
        let mut q = vec![TPoly::zero(); self.deg() - db + 1];
        while !r.is_zero() {
            let dr = r.deg();
            assert!(dr >= db, "inexact polynomial division");
            let c = r.lead().div_exact(b.lead());
            q[dr - db] = c.clone();
            let mut next = r.0.clone();
            for (j, bc) in b.0.iter().enumerate() {
                next[j + dr - db] = next[j + dr - db].sub(&bc.mul(&c));
            }
            r = RecPoly::trim(next);
        }
        RecPoly::trim(q)
    }
}

// ---------------------------------------------------------------------------
// QtRational
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarError {
    DivisionByZero,
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::DivisionByZero => write!(f, "division by zero in Q(q,t)"),
        }
    }
}

impl std::error::Error for ScalarError {}

/// An element of Q(q,t) in canonical num/den form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QtRational {
    num: QtPoly,
    den: QtPoly,
}

impl QtRational {
    pub fn zero() -> Self {
        QtRational {
            num: QtPoly::zero(),
            den: QtPoly::one(),
        }
    }

    pub fn one() -> Self {
        QtRational {
            num: QtPoly::one(),
            den: QtPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        QtRational {
            num: QtPoly::constant(BigInt::from(n)),
            den: QtPoly::one(),
        }
    }

    pub fn q() -> Self {
        QtRational::qt_monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        QtRational::qt_monomial(1, 0, 1)
    }

    /// c * q^dq * t^dt with possibly negative exponents.
    pub fn qt_monomial(c: i64, dq: i64, dt: i64) -> Self {
        let (nq, dqden) = if dq >= 0 { (dq as u32, 0) } else { (0, (-dq) as u32) };
        let (nt, dtden) = if dt >= 0 { (dt as u32, 0) } else { (0, (-dt) as u32) };
        let mut r = QtRational {
            num: QtPoly::monomial(BigInt::from(c), nq, nt),
            den: QtPoly::monomial(BigInt::one(), dqden, dtden),
        };
        r.canonicalize();
        r
    }

    pub fn from_poly(num: QtPoly) -> Self {
        QtRational {
            num,
            den: QtPoly::one(),
        }
    }

    pub fn from_num_den(num: QtPoly, den: QtPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let mut r = QtRational { num, den };
        r.canonicalize();
        Ok(r)
    }

    pub fn numerator(&self) -> &QtPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QtPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn canonicalize(&mut self) {
        debug_assert!(!self.den.is_zero());
        if self.num.is_zero() {
            self.den = QtPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num = self.num.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
        if !self.den.lead_coeff_positive() {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let mut r = QtRational {
                num: self.num.add(&other.num),
                den: self.den.clone(),
            };
            r.canonicalize();
            return r;
        }
        let mut r = QtRational {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        };
        r.canonicalize();
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        QtRational {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return QtRational::zero();
        }
        // Cross-reduction: inputs are canonical, so only the cross pairs can
        // share factors and the result below is already reduced.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1);
        let n2 = other.num.div_exact(&g2);
        let d1 = self.den.div_exact(&g2);
        let d2 = other.den.div_exact(&g1);
        let mut num = n1.mul(&n2);
        let mut den = d1.mul(&d2);
        if !den.lead_coeff_positive() {
            num = num.neg();
            den = den.neg();
        }
        QtRational { num, den }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let mut num = self.den.clone();
        let mut den = self.num.clone();
        if !den.lead_coeff_positive() {
            num = num.neg();
            den = den.neg();
        }
        Ok(QtRational { num, den })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn div(&self, other: &Self) -> Self {
        self.checked_div(other)
            .expect("division by zero in Q(q,t)")
    }

    pub fn pow(&self, e: i64) -> Self {
        if e == 0 {
            return QtRational::one();
        }
        let base = if e < 0 {
            self.inv().expect("zero to a negative power")
        } else {
            self.clone()
        };
        let mut out = QtRational::one();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Substitute q -> q^eq and t -> t^et (eq, et nonzero), clearing any
    /// negative powers into the denominator.
    pub fn subst_powers(&self, eq: i64, et: i64) -> Self {
        assert!(eq != 0 && et != 0, "exponent substitution must be invertible");
        if self.is_zero() {
            return QtRational::zero();
        }
        let n = self.num.subst_exponents(eq, et);
        let d = self.den.subst_exponents(eq, et);
        let mut min_q = 0i64;
        let mut min_t = 0i64;
        for ((a, b), _) in n.iter().chain(d.iter()) {
            min_q = min_q.min(*a);
            min_t = min_t.min(*b);
        }
        let build = |v: Vec<((i64, i64), BigInt)>| {
            let mut p = QtPoly::zero();
            for ((a, b), c) in v {
                p.terms.insert(((a - min_q) as u32, (b - min_t) as u32), c);
            }
            p
        };
        let mut r = QtRational {
            num: build(n),
            den: build(d),
        };
        r.canonicalize();
        r
    }

    /// The dagger involution q -> 1/q, t -> 1/t.
    pub fn invert_qt(&self) -> Self {
        self.subst_powers(-1, -1)
    }

    /// The star involution t -> 1/t with q fixed.
    pub fn star_t(&self) -> Self {
        self.subst_powers(1, -1)
    }
}

impl fmt::Display for QtPoly {
    fmt_poly_body!();
}

// Small macro so QtPoly printing stays in one place.
macro_rules! fmt_poly_body {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if self.is_zero() {
                return write!(f, "0");
            }
            let mut first = true;
            for ((dq, dt), c) in self.terms.iter() {
                let neg = c.is_negative();
                let abs = c.abs();
                if first {
                    if neg {
                        write!(f, "-")?;
                    }
                    first = false;
                } else if neg {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
                let mut parts: Vec<String> = Vec::new();
                if !abs.is_one() || (*dq == 0 && *dt == 0) {
                    parts.push(abs.to_string());
                }
                match dq {
                    0 => {}
                    1 => parts.push("q".into()),
                    _ => parts.push(format!("q^{}", dq)),
                }
                match dt {
                    0 => {}
                    1 => parts.push("t".into()),
                    _ => parts.push(format!("t^{}", dt)),
                }
                write!(f, "{}", parts.join("*"))?;
            }
            Ok(())
        }
    };
}
use fmt_poly_body;

impl fmt::Display for QtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            if self.num.terms.len() > 1 {
                write!(f, "({})", self.num)
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Ord for QtPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms
            .iter()
            .rev()
            .map(|(k, c)| (k, c))
            .cmp(other.terms.iter().rev().map(|(k, c)| (k, c)))
    }
}

impl PartialOrd for QtPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qp(pairs: &[(i64, u32, u32)]) -> QtPoly {
        let mut p = QtPoly::zero();
        for &(c, dq, dt) in pairs {
            p = p.add(&QtPoly::monomial(BigInt::from(c), dq, dt));
        }
        p
    }

    fn rat(num: &[(i64, u32, u32)], den: &[(i64, u32, u32)]) -> QtRational {
        QtRational::from_num_den(qp(num), qp(den)).unwrap()
    }

    /// (1-t)/(1-q*t^2)
    fn sample() -> QtRational {
        rat(&[(1, 0, 0), (-1, 0, 1)], &[(1, 0, 0), (-1, 1, 2)])
    }

    #[test]
    fn additive_identity() {
        let a = sample();
        assert_eq!(a.add(&QtRational::zero()), a);
    }

    #[test]
    fn t_times_t_inverse_is_one() {
        let t = QtRational::t();
        let tinv = QtRational::qt_monomial(1, 0, -1);
        assert!(t.mul(&tinv).is_one());
    }

    #[test]
    fn gcd_reduction() {
        // (1-t^2)/(1-t) canonicalizes to 1+t
        let a = rat(&[(1, 0, 0), (-1, 0, 2)], &[(1, 0, 0), (-1, 0, 1)]);
        assert_eq!(a, rat(&[(1, 0, 0), (1, 0, 1)], &[(1, 0, 0)]));
    }

    #[test]
    fn invert_qt_matches_worked_example() {
        // (1-t)/(1-q t^2) |-> q t (1-t)/(1-q t^2)
        let a = sample();
        let expect = sample().mul(&QtRational::qt_monomial(1, 1, 1));
        assert_eq!(a.invert_qt(), expect);
    }

    #[test]
    fn invert_qt_trivial_cases() {
        assert!(QtRational::one().invert_qt().is_one());
        let m = QtRational::qt_monomial(1, 2, 1);
        assert_eq!(m.invert_qt(), QtRational::qt_monomial(1, -2, -1));
    }

    #[test]
    fn star_t_cases() {
        assert_eq!(
            QtRational::qt_monomial(1, 0, 3).star_t(),
            QtRational::qt_monomial(1, 0, -3)
        );
        assert_eq!(QtRational::q().star_t(), QtRational::q());
    }

    /// Independent substitution oracle: rebuild the star image monomial by
    /// monomial through QtRational arithmetic and compare.
    fn star_oracle(a: &QtRational) -> QtRational {
        let remap = |p: &QtPoly| {
            let mut acc = QtRational::zero();
            for ((dq, dt), c) in p.terms() {
                let mono = QtRational::qt_monomial(1, *dq as i64, -(*dt as i64));
                let c = QtRational::from_poly(QtPoly::constant(c.clone()));
                acc = acc.add(&c.mul(&mono));
            }
            acc
        };
        remap(&a.num).div(&remap(&a.den))
    }

    #[test]
    fn star_t_against_substitution_oracle() {
        let a = rat(&[(1, 0, 0), (-1, 1, 1)], &[(1, 0, 0), (-1, 0, 1)]);
        assert_eq!(a.star_t(), star_oracle(&a));
        let b = sample();
        assert_eq!(b.star_t(), star_oracle(&b));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            QtRational::one().checked_div(&QtRational::zero()),
            Err(ScalarError::DivisionByZero)
        );
    }

    fn arb_poly() -> impl Strategy<Value = QtPoly> {
        proptest::collection::vec(((-4i64..5), (0u32..3), (0u32..3)), 0..5)
            .prop_map(|v| qp(&v))
    }

    fn arb_rat() -> impl Strategy<Value = QtRational> {
        (arb_poly(), arb_poly())
            .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| QtRational::from_num_den(n, d).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn invert_qt_is_involutive(a in arb_rat()) {
            prop_assert_eq!(a.invert_qt().invert_qt(), a);
        }

        #[test]
        fn star_t_is_involutive(a in arb_rat()) {
            prop_assert_eq!(a.star_t().star_t(), a);
        }

        #[test]
        fn field_axioms(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }

        #[test]
        fn sub_then_add_roundtrips(a in arb_rat(), b in arb_rat()) {
            prop_assert_eq!(a.sub(&b).add(&b), a);
        }
    }
}
