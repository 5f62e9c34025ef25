use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
        }
    }

    fn prec(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Mul | BinOp::Div => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    /// nonnegative integer literal; negatives are `Neg`
    Int(i64),
    Q,
    Var(String),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    /// (z; q^step)_n, n = None for the infinite product
    Poch { z: Box<Expr>, step: Box<Expr>, n: Option<Box<Expr>> },
    QBin(Box<Expr>, Box<Expr>),
    Sum { var: String, lo: Box<Expr>, hi: Option<Box<Expr>>, body: Box<Expr> },
    QTheta { chi: String, den: Box<Expr>, shift: Box<Expr> },
    Call { name: String, variant: Option<String>, arg: Box<Expr> },
}

/// A top-level statement: a value or an identity.
#[derive(Clone, Debug, PartialEq)]
pub enum Stmt {
    Value(Expr),
    Eq(Expr, Expr),
}

impl Expr {
    pub fn bin(op: BinOp, a: Expr, b: Expr) -> Expr {
        Expr::Bin(op, Box::new(a), Box::new(b))
    }

    /// 3 = additive, 2 = multiplicative, 1 = unary, 0 = power/atom (tighter binds lower)
    fn level(&self) -> u8 {
        match self {
            Expr::Bin(op, ..) => 4 - op.prec(),
            Expr::Neg(_) => 1,
            _ => 0,
        }
    }

    fn is_atom(&self) -> bool {
        !matches!(self, Expr::Bin(..) | Expr::Neg(_) | Expr::Pow(..))
    }
}

fn paren(f: &mut fmt::Formatter<'_>, e: &Expr, wrap: bool) -> fmt::Result {
    if wrap {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Q => write!(f, "q"),
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Neg(e) => {
                write!(f, "-")?;
                paren(f, e, e.level() > 1)
            }
            Expr::Bin(op, a, b) => {
                let me = self.level();
                paren(f, a, a.level() > me)?;
                write!(f, " {} ", op.symbol())?;
                // left-associative: an equal-level right operand needs parentheses
                paren(f, b, b.level() >= me)
            }
            Expr::Pow(b, e) => {
                paren(f, b, !b.is_atom())?;
                write!(f, "^")?;
                paren(f, e, !matches!(**e, Expr::Int(_) | Expr::Var(_) | Expr::Q))
            }
            Expr::Poch { z, step, n } => match n {
                Some(n) => write!(f, "poch({z}; {step}; {n})"),
                None => write!(f, "poch({z}; {step}; inf)"),
            },
            Expr::QBin(n, m) => write!(f, "qbin({n}, {m})"),
            Expr::Sum { var, lo, hi, body } => match hi {
                Some(h) => write!(f, "sum({var} = {lo} .. {h}, {body})"),
                None => write!(f, "sum({var} = {lo} .. inf, {body})"),
            },
            Expr::QTheta { chi, den, shift } => write!(f, "qtheta({chi}, {den}, {shift})"),
            Expr::Call { name, variant, arg } => match variant {
                Some(v) => write!(f, "{name}.{v}({arg})"),
                None => write!(f, "{name}({arg})"),
            },
        }
    }
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Value(e) => write!(f, "{e}"),
            Stmt::Eq(a, b) => write!(f, "{a} == {b}"),
        }
    }
}
