//! Identity checks. Each returns a [`CheckResult`] whose witness is the
//! exact difference of the two sides.

use num_traits::{One, Zero};

use crate::algebra::{Poly, TruncSeries};
use crate::error::{Error, Result};
use crate::families::{
    construct, gegenbauer_explicit, hermite, rhp_explicit, sqrt_n_scale, FamilyId, FamilyKind,
    Normalization, OperatorSeries,
};
use crate::numeric::{
    binomial, checked_div, compositions, factorial, int, pochhammer, powi, powu, rat, GammaArg,
    GammaRatio, GaussianRational, ParamN, Rational, Surd,
};
use crate::report::{CheckResult, Params, Witness};

/// `N^{n/2} H_n^N(X√N)`.
pub fn rhp_scaled(n: usize, big_n: &ParamN) -> Result<Poly> {
    sqrt_n_scale(&rhp_explicit(n, big_n)?, n, big_n)
}

fn half(k: usize) -> Rational {
    rat(k as i64, 2)
}

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// `N^{n/2} H_n^N(X√N) = n! Σ_j c_j X^j (1+X²)^{(n−j)/2}` with `c_j` the
/// coefficients of `C_n^N`.
pub fn check_nagel(n: usize, big_n: &ParamN) -> CheckResult {
    CheckResult::run("nagel", Params::new().n(n).big_n(big_n), || {
        let lhs = rhp_scaled(n, big_n)?;
        let geg = gegenbauer_explicit(n, big_n);
        let one_plus_x2 = Poly::from_ints(&[1, 0, 1]);
        let mut rhs = Poly::zero();
        for (j, c) in geg.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if (n - j) % 2 != 0 {
                return Err(Error::UnresolvedHalfPower(format!("(1+X²)^({}/2)", n - j)));
            }
            rhs = &rhs + &(&Poly::monomial(c.clone(), j) * &one_plus_x2.pow((n - j) / 2));
        }
        Ok(Witness::Poly(&lhs - &rhs.scale(&factorial(n))))
    })
}

/// `α_n^N = (−2i)^n (N)_n / ((2N+n)_n n!) · M^{n/2}` with `M = 1/2 − N − n`,
/// the half power kept apart until paired.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaCoefficient {
    pub unit: GaussianRational,
    pub rational: Rational,
    pub base: Rational,
    pub half_exponent: i64,
}

impl AlphaCoefficient {
    pub fn new(n: usize, big_n: &ParamN) -> Result<Self> {
        let nv = big_n.value();
        let denom = pochhammer(&(nv * int(2) + int(n as i64)), n) * factorial(n);
        if denom.is_zero() {
            return Err(Error::Pole(format!("(2N+n)_n = 0 at N = {nv}, n = {n}")));
        }
        Ok(Self {
            unit: GaussianRational::new(int(0), int(-2)).pow(n as u32),
            rational: pochhammer(nv, n) / denom,
            base: rat(1, 2) - nv - int(n as i64),
            half_exponent: n as i64,
        })
    }

    /// `α · c · u · M^{e/2}`, which must come out rational.
    pub fn pair(
        &self,
        c: &Rational,
        unit: &GaussianRational,
        half_exponent: i64,
    ) -> Result<Rational> {
        Surd::new(&self.unit * unit)
            .scale(&GaussianRational::real(&self.rational * c))
            .mul(&Surd::half_power(
                self.base.clone(),
                self.half_exponent + half_exponent,
            ))
            .resolve_real()
    }
}

/// `C_n^N(X) = α_n^N H_n^M(−iX√M)`, `M = 1/2 − N − n`.
pub fn check_cnix(n: usize, big_n: &ParamN) -> CheckResult {
    CheckResult::run("cnix", Params::new().n(n).big_n(big_n), || {
        let alpha = AlphaCoefficient::new(n, big_n)?;
        let m = ParamN::new(alpha.base.clone())?;
        let h = rhp_explicit(n, &m)?;
        let mut rhs = vec![Rational::zero(); h.coeffs().len()];
        for (j, c) in h.coeffs().iter().enumerate() {
            if !c.is_zero() {
                rhs[j] = alpha.pair(c, &GaussianRational::i_pow(-(j as i64)), j as i64)?;
            }
        }
        Ok(Witness::Poly(
            &gegenbauer_explicit(n, big_n) - &Poly::new(rhs),
        ))
    })
}

/// `C_n^N = ((N)_{n/2}/n!) E_b H_n(X√b)`, `b ~ Γ(N + n/2)`.
pub fn check_subordination_gegenbauer(n: usize, big_n: &ParamN) -> CheckResult {
    CheckResult::run(
        "subordination-gegenbauer",
        Params::new().n(n).big_n(big_n),
        || {
            let h = hermite(n);
            let prefactor = GammaRatio::pochhammer(GammaArg::shifted(int(0)), half(n));
            let mut rhs = vec![Rational::zero(); n + 1];
            for (j, c) in h.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let moment = GammaRatio::gamma_moment(GammaArg::shifted(half(n)), half(j));
                rhs[j] = c * prefactor.mul(&moment).reduce(big_n.value())?;
            }
            let rhs = Poly::new(rhs).scale(&checked_div(&int(1), &factorial(n))?);
            Ok(Witness::Poly(&gegenbauer_explicit(n, big_n) - &rhs))
        },
    )
}

/// `H_n = (N^{n/2}/(N)_{n/2}) E_c H_n^N(X√N/√c)`, `c ~ Γ(N + (n+1)/2)`. The
/// coefficient of `X^{n−2k}` carries `(2N)_n E c^{k−n/2} / ((N+1/2)_k (N)_{n/2})`,
/// reduced as one Gamma ratio.
pub fn check_subordination_hermite(n: usize, big_n: &ParamN) -> CheckResult {
    CheckResult::run(
        "subordination-hermite",
        Params::new().n(n).big_n(big_n),
        || {
            let nv = big_n.value();
            let mut rhs = vec![Rational::zero(); n + 1];
            for k in 0..=n / 2 {
                let gammas = GammaRatio::pochhammer(GammaArg::doubled(int(0)), int(n as i64))
                    .mul(
                        &GammaRatio::pochhammer(GammaArg::shifted(rat(1, 2)), int(k as i64))
                            .inv()?,
                    )
                    .mul(&GammaRatio::gamma_moment(
                        GammaArg::shifted(half(n + 1)),
                        int(k as i64) - half(n),
                    ))
                    .mul(&GammaRatio::pochhammer(GammaArg::shifted(int(0)), half(n)).inv()?);
                let scalar = sign(k) * factorial(n) * powi(&int(2), -2 * k as i64)?
                    / (factorial(n - 2 * k) * factorial(k));
                // N^{k−n} from the coefficient, N^{(n−2k)/2} from the argument, N^{n/2} in front
                let n_powers = Surd::half_power(nv.clone(), 2 * (k as i64 - n as i64))
                    .mul(&Surd::half_power(nv.clone(), (n - 2 * k) as i64))
                    .mul(&Surd::half_power(nv.clone(), n as i64))
                    .resolve_real()?;
                rhs[n - 2 * k] = scalar * n_powers * gammas.reduce(nv)?;
            }
            Ok(Witness::Poly(&hermite(n) - &Poly::new(rhs)))
        },
    )
}

/// `H_n′ = 2n H_{n−1}`, `(H_n^N)′ = n(2N+n−1)/N H_{n−1}^N`,
/// `(C_n^N)′ = 2N C_{n−1}^{N+1}`.
pub fn check_derivative(kind: FamilyKind, n: usize, big_n: Option<&ParamN>) -> CheckResult {
    let mut params = Params::new().text("family", kind.name()).n(n);
    if let Some(b) = big_n {
        params = params.big_n(b);
    }
    CheckResult::run("derivative", params, || {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "derivative identity needs n ≥ 1".into(),
            ));
        }
        let need = || big_n.ok_or_else(|| Error::InvalidParameter(format!("{kind} needs N")));
        let (lhs, rhs) = match kind {
            FamilyKind::Hermite => (
                hermite(n).derivative(),
                hermite(n - 1).scale(&int(2 * n as i64)),
            ),
            FamilyKind::Rhp => {
                let b = need()?;
                let nv = b.value();
                let c = checked_div(&(int(n as i64) * (nv * int(2) + int(n as i64 - 1))), nv)?;
                (
                    rhp_explicit(n, b)?.derivative(),
                    rhp_explicit(n - 1, b)?.scale(&c),
                )
            }
            FamilyKind::Gegenbauer => {
                let b = need()?;
                let up = b.shifted(&int(1))?;
                (
                    gegenbauer_explicit(n, b).derivative(),
                    gegenbauer_explicit(n - 1, &up).scale(&(b.value() * int(2))),
                )
            }
        };
        Ok(Witness::Poly(&lhs - &rhs))
    })
}

/// `S^{n/2} H_n(Σ a_k X_k / √S)/n! = Σ_{|m|=n} ∏ a_k^{m_k} H_{m_k}(X_k)/m_k!`
/// with `S = Σ a_k²`, verified on the grid `{0..=d}^r` where `d` is the
/// per-variable degree bound.
pub fn check_hermite_addition(n: usize, a: &[Rational]) -> CheckResult {
    let params = Params::new().n(n).vector("a", a);
    CheckResult::run("hermite-addition", params, || {
        let r = a.len();
        if r == 0 || a.iter().all(Zero::is_zero) {
            return Err(Error::InvalidParameter(
                "addition vector must be nonzero".into(),
            ));
        }
        let s: Rational = a.iter().map(|x| x * x).sum();
        let h = hermite(n);
        let lower: Vec<Poly> = (0..=n).map(hermite).collect();
        let comps = compositions(n, r);
        // each X_k enters the left side through (Σ a X)^j, j ≤ deg H_n, and
        // the right side through H_{m_k}(X_k), m_k ≤ n
        let bound = lower
            .iter()
            .filter_map(Poly::degree)
            .chain(h.degree())
            .max()
            .unwrap_or(0);
        let grid = bound + 1;
        debug_assert!(grid > bound);
        let mut diffs = Vec::new();
        let mut point = vec![0usize; r];
        loop {
            let xs: Vec<Rational> = point.iter().map(|&p| int(p as i64)).collect();
            let lin: Rational = a.iter().zip(&xs).map(|(ak, xk)| ak * xk).sum();
            let mut lhs = Rational::zero();
            for (j, c) in h.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let s_part = Surd::half_power(s.clone(), (n - j) as i64).resolve_real()?;
                lhs += c * powu(&lin, j as u64) * s_part;
            }
            lhs /= factorial(n);
            let mut rhs = Rational::zero();
            for m in &comps {
                let mut term = Rational::one();
                for k in 0..r {
                    term *= powu(&a[k], m[k] as u64) * lower[m[k]].eval(&xs[k]) / factorial(m[k]);
                }
                rhs += term;
            }
            diffs.push(lhs - rhs);
            if !advance(&mut point, grid) {
                break;
            }
        }
        Ok(Witness::Values(diffs))
    })
}

/// Odometer over `{0..base}^len`; false once wrapped.
fn advance(point: &mut [usize], base: usize) -> bool {
    for p in point.iter_mut() {
        *p += 1;
        if *p < base {
            return true;
        }
        *p = 0;
    }
    false
}

/// With `M = 1/2 − N − n` and `H̃_k(Y) = H_k^M(Y√M)`:
/// `H̃_n(X+Y) = Σ_k C(n,k) (−X/√M)^{n−k} (2N+n)_{n−k} H̃_k(Y)`.
/// Both sides are multiplied by `M^{n/2}` so every half power pairs, and
/// compared on the `(n+1)×(n+1)` grid (degree `n` in each variable).
pub fn check_rhp_addition(n: usize, big_n: &ParamN) -> CheckResult {
    CheckResult::run("rhp-addition", Params::new().n(n).big_n(big_n), || {
        let nv = big_n.value();
        let m = ParamN::new(rat(1, 2) - nv - int(n as i64))?;
        let mv = m.value().clone();
        let members: Vec<Poly> = (0..=n)
            .map(|k| rhp_explicit(k, &m))
            .collect::<Result<_>>()?;
        let shift = nv * int(2) + int(n as i64);
        // M^{(e + j)/2} h_j Z^j summed
        let scaled_eval = |p: &Poly, e: usize, z: &Rational| -> Result<Rational> {
            let mut acc = Rational::zero();
            for (j, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    acc += c
                        * powu(z, j as u64)
                        * Surd::half_power(mv.clone(), (e + j) as i64).resolve_real()?;
                }
            }
            Ok(acc)
        };
        let mut diffs = Vec::new();
        for xi in 0..=n {
            for yi in 0..=n {
                let (x, y) = (int(xi as i64), int(yi as i64));
                let lhs = scaled_eval(&members[n], n, &(&x + &y))?;
                let mut rhs = Rational::zero();
                for k in 0..=n {
                    let coef = binomial(n, k)
                        * powu(&-x.clone(), (n - k) as u64)
                        * pochhammer(&shift, n - k);
                    // M^{n/2} M^{−(n−k)/2} = M^{k/2}
                    rhs += coef * scaled_eval(&members[k], k, &y)?;
                }
                diffs.push(lhs - rhs);
            }
        }
        Ok(Witness::Values(diffs))
    })
}

/// Scaling identities for the three families at scale `c`.
pub fn check_scaling(
    kind: FamilyKind,
    n: usize,
    big_n: Option<&ParamN>,
    c: &Rational,
) -> CheckResult {
    let mut params = Params::new()
        .text("family", kind.name())
        .n(n)
        .rational("c", c);
    if let Some(b) = big_n {
        params = params.big_n(b);
    }
    CheckResult::run("scaling", params, || {
        let need = || big_n.ok_or_else(|| Error::InvalidParameter(format!("{kind} needs N")));
        let one_minus = int(1) - c * c;
        let weight = |l: usize| powu(&one_minus, l as u64) * powu(c, (n - 2 * l) as u64) * sign(l);
        let mut rhs = Poly::zero();
        let lhs = match kind {
            FamilyKind::Hermite => {
                for l in 0..=n / 2 {
                    let w = weight(l) * factorial(n) / (factorial(n - 2 * l) * factorial(l));
                    rhs = &rhs + &hermite(n - 2 * l).scale(&w);
                }
                hermite(n).compose_linear(c, &int(0))
            }
            FamilyKind::Gegenbauer => {
                let b = need()?;
                for l in 0..=n / 2 {
                    let w = weight(l) * pochhammer(b.value(), l) / factorial(l);
                    let up = b.shifted(&int(l as i64))?;
                    rhs = &rhs + &gegenbauer_explicit(n - 2 * l, &up).scale(&w);
                }
                gegenbauer_explicit(n, b).compose_linear(c, &int(0))
            }
            FamilyKind::Rhp => {
                let b = need()?;
                for l in 0..=n / 2 {
                    let w = weight(l) * factorial(n) * pochhammer(b.value(), l)
                        / (factorial(n - 2 * l) * factorial(l));
                    let up = b.shifted(&int(l as i64))?;
                    rhs = &rhs + &rhp_scaled(n - 2 * l, &up)?.scale(&w);
                }
                rhp_scaled(n, b)?.compose_linear(c, &int(0))
            }
        };
        Ok(Witness::Poly(&lhs - &rhs))
    })
}

/// `(1 − tX/N)² + t²/N` as a polynomial in `t`.
fn genfunc_base(big_n: &ParamN, x: &Rational) -> Result<Poly> {
    let inv = checked_div(&int(1), big_n.value())?;
    let lin = Poly::new(vec![int(1), -(x * &inv)]);
    Ok(&(&lin * &lin) + &Poly::monomial(inv, 2))
}

/// Family side and closed form of a generating-function identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesSides {
    pub family: TruncSeries,
    pub closed: TruncSeries,
}

impl SeriesSides {
    fn witness(&self) -> Witness {
        Witness::Series(self.family.sub(&self.closed))
    }
}

/// `Σ H_n^N(X) t^n/n!` against `((1 − tX/N)² + t²/N)^{−N}`.
pub fn genfunc_rhp_sides(big_n: &ParamN, x: &Rational, order: usize) -> Result<SeriesSides> {
    let family =
        TruncSeries::from_fn(
            order,
            |k| Ok(rhp_explicit(k, big_n)?.eval(x) / factorial(k)),
        )?;
    let closed = TruncSeries::from_poly(&genfunc_base(big_n, x)?, order).pow(&-big_n.value())?;
    Ok(SeriesSides { family, closed })
}

pub fn check_genfunc_rhp(big_n: &ParamN, x: &Rational, order: usize) -> CheckResult {
    let params = Params::new()
        .big_n(big_n)
        .rational("X", x)
        .int("order", order as i64);
    CheckResult::run("genfunc-rhp", params, || {
        Ok(genfunc_rhp_sides(big_n, x, order)?.witness())
    })
}

/// `Σ H_{n+k}^N(X) t^n/n!` against `φ^{1+k/N} · H_k^N(X − (1 + X²/N) t)`
/// with `φ = ((1 − tX/N)² + t²/N)^{−N}`.
pub fn shifted_genfunc_sides(
    big_n: &ParamN,
    k: usize,
    x: &Rational,
    order: usize,
) -> Result<SeriesSides> {
    let nv = big_n.value();
    let family = TruncSeries::from_fn(order, |j| {
        Ok(rhp_explicit(j + k, big_n)?.eval(x) / factorial(j))
    })?;
    let power =
        TruncSeries::from_poly(&genfunc_base(big_n, x)?, order).pow(&(-nv - int(k as i64)))?;
    let slope = -(int(1) + checked_div(&(x * x), nv)?);
    let shifted = rhp_explicit(k, big_n)?.compose_linear(&slope, x);
    let closed = power.mul(&TruncSeries::from_poly(&shifted, order));
    Ok(SeriesSides { family, closed })
}

pub fn check_shifted_genfunc(big_n: &ParamN, k: usize, x: &Rational, order: usize) -> CheckResult {
    let params = Params::new()
        .big_n(big_n)
        .int("k", k as i64)
        .rational("X", x)
        .int("order", order as i64);
    CheckResult::run("shifted-genfunc", params, || {
        Ok(shifted_genfunc_sides(big_n, k, x, order)?.witness())
    })
}

/// `E_{Z_N}(a − ibZ_N)^{−2N} = (a² + b²)^{−N}` after dividing by `a^{−2N}`:
/// `Σ_m (2N)_m/m! (i/a)^m E Z_N^m b^m = (1 + b²/a²)^{−N}`. Also checks the
/// Gamma route `E e^{bU} E e^{−bV} = (1 − b²)^{−N}` with `U`, `V` ~ Γ(N).
pub fn check_moment_3665(big_n: &ParamN, a: &Rational, order: usize) -> CheckResult {
    let params = Params::new()
        .big_n(big_n)
        .rational("a", a)
        .int("order", order as i64);
    let mut gamma_route_failed = false;
    let result = CheckResult::run("moment-3665", params, || {
        let nv = big_n.value();
        let student = crate::families::MomentSequence::StudentR(nv.clone());
        let inv_a = checked_div(&int(1), a)?;
        let two_n = nv * int(2);
        let lhs = TruncSeries::from_fn(order, |m| {
            let term = GaussianRational::i_pow(m as i64).scale(
                &(pochhammer(&two_n, m) / factorial(m)
                    * powu(&inv_a, m as u64)
                    * student.moment(m as u32)?),
            );
            if !term.is_real() {
                return Err(Error::ImaginaryPart(format!("b^{m} coefficient")));
            }
            Ok(term.re)
        })?;
        let base = Poly::new(vec![int(1), int(0), &inv_a * &inv_a]);
        let rhs = TruncSeries::from_poly(&base, order).pow(&-nv)?;
        let witness = lhs.sub(&rhs);
        if !witness.is_zero() {
            return Ok(Witness::Series(witness));
        }
        let gamma = crate::families::MomentSequence::GammaShape(nv.clone());
        let up = TruncSeries::from_fn(order, |m| Ok(gamma.moment(m as u32)? / factorial(m)))?;
        let down = up.rescale_variable(&int(-1));
        let closed = TruncSeries::from_poly(&Poly::from_ints(&[1, 0, -1]), order).pow(&-nv)?;
        let w2 = up.mul(&down).sub(&closed);
        gamma_route_failed = !w2.is_zero();
        Ok(Witness::Series(w2))
    });
    if gamma_route_failed {
        result.with_notes("gamma route")
    } else {
        result
    }
}

/// `j_ν(c·r)` to the given order.
fn bessel_series(big_n: &ParamN, c: &Rational, order: usize) -> Result<TruncSeries> {
    let op = OperatorSeries::rhp_bessel(big_n.value());
    Ok(TruncSeries::from_fn(order, |k| op.coefficient(k))?.rescale_variable(c))
}

fn exp_series(x: &Rational, order: usize) -> Result<TruncSeries> {
    TruncSeries::from_poly(&Poly::monomial(x.clone(), 1), order).exp()
}

/// `Σ C_n^N(cos θ)/C_n^N(1) · r^n/n!` against `e^{r cos θ} j_{N−1/2}(r sin θ)`.
pub fn feldheim_sides(
    big_n: &ParamN,
    cos: &Rational,
    sin: &Rational,
    order: usize,
) -> Result<SeriesSides> {
    if cos * cos + sin * sin != int(1) {
        return Err(Error::InvalidParameter("cos² + sin² must equal 1".into()));
    }
    let family = TruncSeries::from_fn(order, |n| {
        let c = gegenbauer_explicit(n, big_n);
        let at_one = c.eval(&int(1));
        if at_one.is_zero() {
            return Err(Error::Pole(format!("C_{n}^N(1) = 0 at N = {big_n}")));
        }
        Ok(c.eval(cos) / at_one / factorial(n))
    })?;
    let closed = exp_series(cos, order)?.mul(&bessel_series(big_n, sin, order)?);
    Ok(SeriesSides { family, closed })
}

pub fn check_feldheim(big_n: &ParamN, cos: &Rational, sin: &Rational, order: usize) -> CheckResult {
    let params = Params::new()
        .big_n(big_n)
        .rational("cos", cos)
        .rational("sin", sin)
        .int("order", order as i64);
    CheckResult::run("feldheim", params, || {
        Ok(feldheim_sides(big_n, cos, sin, order)?.witness())
    })
}

/// `Σ ℋ_n^N(X) r^n/n!` against `e^{rX} j_{N−1/2}(r)`.
pub fn feldheim_rhp_sides(big_n: &ParamN, x: &Rational, order: usize) -> Result<SeriesSides> {
    let family = TruncSeries::from_fn(order, |n| {
        let p = construct(&FamilyId::rhp(
            n,
            big_n.clone(),
            Normalization::PaperNormalized,
        ))?;
        Ok(p.eval(x) / factorial(n))
    })?;
    let closed = exp_series(x, order)?.mul(&bessel_series(big_n, &int(1), order)?);
    Ok(SeriesSides { family, closed })
}

pub fn check_feldheim_rhp(big_n: &ParamN, x: &Rational, order: usize) -> CheckResult {
    let params = Params::new()
        .big_n(big_n)
        .rational("X", x)
        .int("order", order as i64);
    CheckResult::run("feldheim-rhp", params, || {
        Ok(feldheim_rhp_sides(big_n, x, order)?.witness())
    })
}

/// Every route of `kind` at `(n, N)` against the first.
pub fn check_routes(kind: FamilyKind, n: usize, big_n: Option<&ParamN>) -> CheckResult {
    use crate::families::{route_poly, routes};
    let mut params = Params::new().text("family", kind.name()).n(n);
    if let Some(b) = big_n {
        params = params.big_n(b);
    }
    let mut mismatch = None;
    let result = CheckResult::run("routes", params, || {
        let all = routes(kind);
        let reference = route_poly(kind, n, big_n, all[0])?;
        for &r in &all[1..] {
            let diff = &reference - &route_poly(kind, n, big_n, r)?;
            if !diff.is_zero() {
                mismatch = Some(r);
                return Ok(Witness::Poly(diff));
            }
        }
        Ok(Witness::Poly(Poly::zero()))
    });
    match mismatch {
        Some(r) => result.with_notes(format!("{} differs from {r}", routes(kind)[0])),
        None => result,
    }
}
