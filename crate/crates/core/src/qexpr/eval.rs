use super::{Expr, QexprError, Var};
use crate::fps::{
    divisor_series, geometric, inv_pochhammer, pochhammer, q_binomial, theta, FpsError, Series,
    ThetaKind,
};

/// Evaluates `e` as a series truncated to `order`.
pub fn eval(e: &Expr, order: usize) -> Result<Series, QexprError> {
    Ok(match e {
        Expr::Int(v) => Series::constant(v.clone().into(), order),
        Expr::Var(Var::Q) => Series::q(order),
        Expr::Var(Var::Z) => Series::z(order),
        Expr::Neg(a) => -eval(a, order)?,
        Expr::Add(a, b) => eval(a, order)? + eval(b, order)?,
        Expr::Sub(a, b) => eval(a, order)? - eval(b, order)?,
        Expr::Mul(a, b) => eval(a, order)? * eval(b, order)?,
        Expr::Div(a, b) => div(eval(a, order)?, b, order)?,
        Expr::Pow(a, n) => pow(&eval(a, order)?, *n, order),
        Expr::Poch(spec) => pochhammer(spec, order).map_err(poch_error)?,
        Expr::QBin(n, k) => q_binomial(*n as usize, *k as usize, order),
        Expr::Named(name, args) => named(name, args, order)?,
    })
}

fn poch_error(err: FpsError) -> QexprError {
    match err {
        FpsError::InvalidPochSpec(why) => QexprError::InvalidPochSpec(why),
        other => QexprError::Series(other),
    }
}

/// Division by a Pochhammer product takes the linear-time reciprocal.
fn div(num: Series, den: &Expr, order: usize) -> Result<Series, QexprError> {
    let inv = match den {
        Expr::Poch(spec) => match inv_pochhammer(spec, order) {
            Err(FpsError::NonUnitConstantTerm(c)) => return Err(QexprError::NonUnitDivisor(c)),
            other => other.map_err(poch_error)?,
        },
        _ => match eval(den, order)?.invert() {
            Err(FpsError::NonUnitConstantTerm(c)) => return Err(QexprError::NonUnitDivisor(c)),
            other => other.map_err(QexprError::Series)?,
        },
    };
    Ok(num * inv)
}

fn pow(base: &Series, mut n: u32, order: usize) -> Series {
    let mut acc = Series::one(order);
    let mut sq = base.clone();
    while n > 0 {
        if n & 1 == 1 {
            acc = &acc * &sq;
        }
        n >>= 1;
        if n > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

fn bad(name: &str, reason: &'static str) -> QexprError {
    QexprError::BadArguments {
        name: name.to_string(),
        reason,
    }
}

/// The exponent of `v` in an argument written `1`, `v` or `v^e`.
fn var_power(arg: &Expr, v: Var) -> Option<usize> {
    match arg {
        Expr::Int(i) if *i == 1.into() => Some(0),
        Expr::Var(w) if *w == v => Some(1),
        Expr::Pow(b, e) if **b == Expr::Var(v) => Some(*e as usize),
        _ => None,
    }
}

fn named(name: &str, args: &[Expr], order: usize) -> Result<Series, QexprError> {
    let no_args = |s: Series| {
        if args.is_empty() {
            Ok(s)
        } else {
            Err(bad(name, "takes no arguments"))
        }
    };
    match name {
        "dsum" => no_args(divisor_series(1, order)),
        "pent" => no_args(theta(ThetaKind::Pentagonal, order)),
        "sqtheta" => no_args(theta(ThetaKind::Square, order)),
        "dsum_ge" => match args {
            [Expr::Int(k)] => {
                let k = usize::try_from(k).map_err(|_| bad(name, "k out of range"))?;
                if k == 0 {
                    return Err(bad(name, "k must be at least 1"));
                }
                Ok(divisor_series(k, order))
            }
            _ => Err(bad(name, "expects one integer k")),
        },
        "geo" => match args {
            [za, qb] => {
                let a = var_power(za, Var::Z).ok_or(bad(name, "first argument must be z^a"))?;
                let b = var_power(qb, Var::Q).ok_or(bad(name, "second argument must be q^b"))?;
                geometric(a, b, order).map_err(QexprError::Series)
            }
            _ => Err(bad(name, "expects geo(z^a, q^b)")),
        },
        _ => Err(QexprError::UnknownName(name.to_string())),
    }
}
