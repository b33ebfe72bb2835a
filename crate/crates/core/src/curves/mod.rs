//! The elliptic curve E over ℚ(u), its five generators, the eight
//! combinations attached to the curves E^(i), and the birational
//! correspondence between E and the quartic 𝒞.

mod weierstrass;

pub use weierstrass::{Point, ShortWeierstrass};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::families::table1_poly;
use crate::polyfield::{Polynomial, RationalFunction};
use crate::quintuple::{
    construct_quintuple, curve_c_base_point, curve_c_coefficients, specialized_point, Construction,
};

pub type FunctionFieldCurve = ShortWeierstrass<RationalFunction>;
pub type FunctionFieldPoint = Point<RationalFunction>;

fn poly(s: &str) -> Polynomial {
    Polynomial::parse(s).expect("built-in polynomial")
}

fn rf(num: &str, den: &str) -> RationalFunction {
    RationalFunction::new(poly(num), poly(den)).expect("nonzero denominator")
}

pub fn curve_e() -> FunctionFieldCurve {
    let a = &RationalFunction::from_int(-27)
        * &rf(
            "256*u^8 + 64*u^7 - 1280*u^6 + 1216*u^5 + 3265*u^4 - 2372*u^3 + 310*u^2 - 332*u + 169",
            "1",
        );
    let b = &RationalFunction::from_int(54)
        * &rf(
            "4096*u^12 + 1536*u^11 - 30624*u^10 - 18400*u^9 + 74448*u^8 + 125568*u^7 - 59313*u^6 \
             - 165978*u^5 + 154773*u^4 - 40360*u^3 + 5187*u^2 - 6474*u + 2197",
            "1",
        );
    ShortWeierstrass::new(a, b).expect("E is nonsingular")
}

/// The generators `S1..S5`.
pub fn generators() -> [FunctionFieldPoint; 5] {
    let s1 = Point::new(
        rf("48*u^4 + 168*u^3 - 9*u^2 - 138*u + 39", "1"),
        rf("-1944*u^5 - 1944*u^4 + 4374*u^3 + 486*u^2 - 972*u", "1"),
    );
    let s2 = Point::new(
        rf(
            "48*u^6 + 588*u^5 + 753*u^4 - 1014*u^3 + 24*u^2 - 6*u + 39",
            "u^2 + 2*u + 1",
        ),
        rf(
            "-5832*u^8 - 25596*u^7 - 6156*u^6 + 48438*u^5 - 8100*u^4 + 324*u^3 - 3240*u^2 + 162*u",
            "u^3 + 3*u^2 + 3*u + 1",
        ),
    );
    let s3 = Point::new(
        rf("48*u^6 + 204*u^5 - 855*u^4 + 78*u^3 + 2028*u^2 - 1098*u + 27", "u^2 - 6*u + 9"),
        rf(
            "-5832*u^8 + 21060*u^7 + 972*u^6 - 94446*u^5 + 102384*u^4 + 34020*u^3 - 67392*u^2 + 486*u + 8748",
            "u^3 - 9*u^2 + 27*u - 27",
        ),
    );
    let s4 = Point::new(
        rf("48*u^4 + 492*u^3 + 693*u^2 - 84*u - 69", "1"),
        rf(
            "-5832*u^5 - 19764*u^4 - 15228*u^3 + 3402*u^2 + 2754*u - 324",
            "1",
        ),
    );
    let s5 = Point::new(
        rf("48*u^6 + 12*u^5 - 291*u^4 + 66*u^3 + 600*u^2 + 66*u - 69", "u^2 + 2*u + 1"),
        rf(
            "-1080*u^8 - 2484*u^7 + 6480*u^6 + 17550*u^5 - 1512*u^4 - 18468*u^3 - 3348*u^2 + 2538*u + 324",
            "u^3 + 3*u^2 + 3*u + 1",
        ),
    );
    [s1, s2, s3, s4, s5]
}

/// Coefficients of `Q_i` in terms of `S1..S5`.
pub const TABLE1_COMBINATIONS: [[i64; 5]; 8] = [
    [-4, -2, -2, 3, 5],
    [-4, -1, -2, 2, 4],
    [-3, -1, -2, 1, 4],
    [-3, -1, -1, 2, 3],
    [-2, -1, -2, 2, 4],
    [-2, 0, -2, 1, 3],
    [-1, -1, -1, 1, 3],
    [0, 0, 0, -1, 1],
];

pub fn table1_point(i: usize) -> Result<FunctionFieldPoint> {
    crate::families::check_index(i)?;
    let e = curve_e();
    combination_small_steps(&e, &generators(), &TABLE1_COMBINATIONS[i - 1])
}

/// `Σ k_i·S_i` added one generator at a time, always taking the step that
/// gives the lowest-degree x-coordinate. The partial sums then stay close to
/// the target, whose coordinates are small, instead of passing through large
/// multiples such as `5·S5`.
pub fn combination_small_steps(
    e: &FunctionFieldCurve,
    gens: &[FunctionFieldPoint],
    coeffs: &[i64],
) -> Result<FunctionFieldPoint> {
    if gens.iter().any(|g| !e.on_curve(g)) {
        return Err(Error::OffCurve);
    }
    let mut left: Vec<i64> = coeffs.to_vec();
    let mut acc = Point::Infinity;
    while left.iter().any(|&k| k != 0) {
        let mut best: Option<(usize, usize, FunctionFieldPoint)> = None;
        for (i, &k) in left.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let step = if k > 0 {
                gens[i].clone()
            } else {
                gens[i].neg()
            };
            let cand = e.add_unchecked(&acc, &step);
            let size = height_proxy(&cand);
            if best.as_ref().is_none_or(|(s, _, _)| size < *s) {
                best = Some((size, i, cand));
            }
        }
        let (_, i, next) = best.expect("some coefficient is nonzero");
        left[i] -= left[i].signum();
        acc = next;
    }
    Ok(acc)
}

fn height_proxy(p: &FunctionFieldPoint) -> usize {
    match p {
        Point::Infinity => 0,
        Point::Affine { x, .. } => x
            .numer()
            .degree()
            .unwrap_or(0)
            .max(x.denom().degree().unwrap_or(0)),
    }
}

/// The birational map between the quartic `z² = F(c)` of 𝒞 and E.
///
/// Writing `c = 1 + w` gives `z² = G(w) = g4·w⁴ + … + g1·w + q0²` with
/// `q0 = ∓z₁(1)`; the classical transformation of such a quartic sends
/// `(w, z)` to a long Weierstrass model, whose short form is E scaled by λ.
#[derive(Clone, Debug)]
pub struct QuarticCorrespondence {
    pub g: [RationalFunction; 5],
    pub q0: RationalFunction,
    pub a1: RationalFunction,
    pub a2: RationalFunction,
    pub a3: RationalFunction,
    pub a4: RationalFunction,
    pub a6: RationalFunction,
    pub b2: RationalFunction,
    /// `E` is the short model with `x ↦ λ²x`, `y ↦ λ³y`.
    pub lambda: RationalFunction,
    pub e: FunctionFieldCurve,
}

impl QuarticCorrespondence {
    pub fn new() -> Result<Self> {
        let f = curve_c_coefficients();
        // G(w) = F(1 + w): Taylor coefficients of F at c = 1.
        let mut g: [RationalFunction; 5] = std::array::from_fn(|_| RationalFunction::zero());
        let binom = [
            [1, 0, 0, 0, 0],
            [1, 1, 0, 0, 0],
            [1, 2, 1, 0, 0],
            [1, 3, 3, 1, 0],
            [1, 4, 6, 4, 1],
        ];
        for (n, fnn) in f.iter().enumerate() {
            for k in 0..=n {
                g[k] = &g[k] + &(fnn * &RationalFunction::from_int(binom[n][k]));
            }
        }
        let (_, z0) = curve_c_base_point();
        if &z0 * &z0 != g[0] {
            return Err(Error::NotIsomorphic(
                "base point is not on the quartic".into(),
            ));
        }
        // With q0 = −z₁(1), the base point (1, +z₁(1)) has an affine image.
        let q0 = -z0;
        let two = RationalFunction::from_int(2);
        let four = RationalFunction::from_int(4);
        let q0sq = &q0 * &q0;
        let a1 = &g[1] / &q0;
        let a2 = &g[2] - &(&(&g[1] * &g[1]) / &(&four * &q0sq));
        let a3 = &(&two * &q0) * &g[3];
        let a4 = -&(&(&four * &q0sq) * &g[4]);
        let a6 = &a2 * &a4;

        let b2 = &(&a1 * &a1) + &(&four * &a2);
        let b4 = &(&two * &a4) + &(&a1 * &a3);
        let b6 = &(&a3 * &a3) + &(&four * &a6);
        let c4 = &(&b2 * &b2) - &(&RationalFunction::from_int(24) * &b4);
        let c6 = &(&(-&(&b2 * &(&b2 * &b2))) + &(&RationalFunction::from_int(36) * &(&b2 * &b4)))
            - &(&RationalFunction::from_int(216) * &b6);
        let short_a = &RationalFunction::from_int(-27) * &c4;
        let short_b = &RationalFunction::from_int(-54) * &c6;

        let e = curve_e();
        let lambda_sq = &(&e.b * &short_a) / &(&e.a * &short_b);
        let root = lambda_sq
            .square_root()
            .ok_or_else(|| Error::NotIsomorphic(format!("λ² = {lambda_sq} is not a square")))?;
        // Either sign is an isomorphism; the two differ by P ↦ −P on E. This
        // sign is the one under which the eight combinations give the class
        // polynomials of the curves E^(i).
        let lambda = -root;
        let l2 = &lambda * &lambda;
        let l4 = &l2 * &l2;
        let l6 = &l4 * &l2;
        if &l4 * &short_a != e.a || &l6 * &short_b != e.b {
            return Err(Error::NotIsomorphic(
                "λ does not carry the short model onto E".into(),
            ));
        }
        Ok(QuarticCorrespondence {
            g,
            q0,
            a1,
            a2,
            a3,
            a4,
            a6,
            b2,
            lambda,
            e,
        })
    }

    /// `(c, z)` on 𝒞 to a point of E.
    pub fn quartic_to_e(
        &self,
        c: &RationalFunction,
        z: &RationalFunction,
    ) -> Result<FunctionFieldPoint> {
        let w = c - &RationalFunction::one();
        let (x, y) = if w.is_zero() {
            if (z + &self.q0).is_zero() {
                (-&self.a2, &(&self.a1 * &self.a2) - &self.a3)
            } else {
                return Err(Error::NoAffineImage);
            }
        } else {
            let two = RationalFunction::from_int(2);
            let q0 = &self.q0;
            let vq = z + q0;
            let w2 = &w * &w;
            let x = &(&(&(&two * q0) * &vq) + &(&self.g[1] * &w)) / &w2;
            let y = &(&(&(&(&two * &two) * &(q0 * q0)) * &vq)
                + &(&(&two * q0) * &(&(&self.g[1] * &w) + &(&self.g[2] * &w2))))
                - &(&(&(&self.g[1] * &self.g[1]) * &w2) / &(&two * q0));
            (x, &y / &(&w2 * &w))
        };
        let big_x =
            &(&RationalFunction::from_int(36) * &x) + &(&RationalFunction::from_int(3) * &self.b2);
        let big_y = &RationalFunction::from_int(108)
            * &(&(&(&RationalFunction::from_int(2) * &y) + &(&self.a1 * &x)) + &self.a3);
        let l2 = &self.lambda * &self.lambda;
        Ok(Point::new(&l2 * &big_x, &(&l2 * &self.lambda) * &big_y))
    }

    /// A point of E to `(c(u), z₁(u))` on 𝒞.
    pub fn e_to_quartic(
        &self,
        p: &FunctionFieldPoint,
    ) -> Result<(RationalFunction, RationalFunction)> {
        let (ex, ey) = p.xy().ok_or(Error::NoAffineImage)?;
        if !self.e.on_curve(p) {
            return Err(Error::OffCurve);
        }
        let l2 = &self.lambda * &self.lambda;
        let big_x = ex / &l2;
        let big_y = ey / &(&l2 * &self.lambda);
        let x = &(&big_x - &(&RationalFunction::from_int(3) * &self.b2))
            / &RationalFunction::from_int(36);
        let y = &(&(&big_y / &RationalFunction::from_int(108)) - &(&self.a1 * &x)) - &self.a3;
        let y = &y / &RationalFunction::from_int(2);
        if y.is_zero() {
            return Err(Error::NoAffineImage);
        }
        let two = RationalFunction::from_int(2);
        let q0 = &self.q0;
        let w = &(&(&(&two * q0) * &(&x + &self.g[2]))
            - &(&(&self.g[1] * &self.g[1]) / &(&two * q0)))
            / &y;
        let v = &-q0 + &(&(&w * &(&(&w * &x) - &self.g[1])) / &(&two * q0));
        Ok((&RationalFunction::one() + &w, v))
    }
}

/// `Σ f_i c^i − z²`, zero exactly when `(c, z)` lies on 𝒞.
pub fn quartic_residual(c: &RationalFunction, z: &RationalFunction) -> RationalFunction {
    &crate::quintuple::curve_c_quartic(c) - &(z * z)
}

pub fn map_to_quartic(
    corr: &QuarticCorrespondence,
    p: &FunctionFieldPoint,
) -> Result<(RationalFunction, RationalFunction)> {
    corr.e_to_quartic(p)
}

/// The D(q(u))-quintuple attached to a point of E.
pub fn point_to_quintuple(
    corr: &QuarticCorrespondence,
    p: &FunctionFieldPoint,
) -> Result<Construction<RationalFunction>> {
    let (c, _) = corr.e_to_quartic(p)?;
    let pt = specialized_point(&RationalFunction::u(), &c)?;
    let out = construct_quintuple(&pt)?;
    if !out.status.distinct_nonzero {
        return Err(Error::Degenerate(format!(
            "quintuple for c = {c} has equal or vanishing elements"
        )));
    }
    if out.status.ad_witness.is_none() {
        return Err(Error::Degenerate(
            "AD + q is not a square; the point does not lie on 𝒞".into(),
        ));
    }
    Ok(out)
}

pub fn squarefree_class_of_point(
    corr: &QuarticCorrespondence,
    p: &FunctionFieldPoint,
) -> Result<Polynomial> {
    let out = point_to_quintuple(corr, p)?;
    Ok(out.quintuple.q.squarefree_class()?.representative)
}

#[derive(Clone, Debug)]
pub struct Table1Row {
    pub index: usize,
    pub point: FunctionFieldPoint,
    pub on_curve: bool,
    pub c: RationalFunction,
    pub class: Polynomial,
    pub expected: Polynomial,
}

impl Table1Row {
    pub fn matches(&self) -> bool {
        self.on_curve && self.class == self.expected
    }
}

pub fn table1_row(corr: &QuarticCorrespondence, i: usize) -> Result<Table1Row> {
    let point = table1_point(i)?;
    let on_curve = corr.e.on_curve(&point);
    let (c, _) = corr.e_to_quartic(&point)?;
    let class = squarefree_class_of_point(corr, &point)?;
    Ok(Table1Row {
        index: i,
        point,
        on_curve,
        c,
        class,
        expected: table1_poly(i)?,
    })
}
