//! Structured command results with text and JSON renderings.

use std::fmt::{self, Write};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use prozeta::exactalg::{BiPoly, BiRatFunc, Monomial};
use prozeta::zeta::Symmetry;
use prozeta::DecompType;

/// Arbitrary-size integer serialized as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map(Int).map_err(serde::de::Error::custom)
    }
}

impl From<BigInt> for Int {
    fn from(v: BigInt) -> Self {
        Int(v)
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `[a, b, "c"]` standing for `c X^a Y^b`; `c` is an integer or `n/d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc(pub u32, pub u32, pub String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFuncDoc {
    pub num: Vec<TermDoc>,
    pub den: Vec<TermDoc>,
}

fn terms_doc(p: &BiPoly) -> Vec<TermDoc> {
    p.terms()
        .map(|(m, c)| TermDoc(m.x, m.y, c.to_string()))
        .collect()
}

fn terms_poly(t: &[TermDoc]) -> Result<BiPoly, String> {
    let parsed = t
        .iter()
        .map(|TermDoc(a, b, c)| {
            c.parse::<BigRational>()
                .map(|v| (Monomial::new(*a, *b), v))
                .map_err(|e| format!("bad coefficient {c:?}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BiPoly::from_terms(parsed))
}

impl RatFuncDoc {
    pub fn to_ratfunc(&self) -> Result<BiRatFunc, String> {
        BiRatFunc::normalize(terms_poly(&self.num)?, terms_poly(&self.den)?)
            .map_err(|e| e.to_string())
    }
}

impl From<&BiRatFunc> for RatFuncDoc {
    fn from(r: &BiRatFunc) -> Self {
        RatFuncDoc {
            num: terms_doc(r.num()),
            den: terms_doc(r.den()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryDoc {
    pub sign: i8,
    pub a: i64,
    pub b: i64,
}

impl From<Symmetry> for SymmetryDoc {
    fn from(s: Symmetry) -> Self {
        SymmetryDoc {
            sign: s.sign,
            a: s.a,
            b: s.b,
        }
    }
}

impl fmt::Display for SymmetryDoc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign > 0 { '+' } else { '-' };
        write!(f, "{s}1 * X^{} * Y^{}", self.a, self.b)
    }
}

/// Degree and decomposition type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeDoc {
    pub n: u32,
    pub e: Vec<u32>,
    pub f: Vec<u32>,
}

impl From<&DecompType> for TypeDoc {
    fn from(d: &DecompType) -> Self {
        TypeDoc {
            n: d.degree(),
            e: d.e().to_vec(),
            f: d.f().to_vec(),
        }
    }
}

impl fmt::Display for TypeDoc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(
            f,
            "n={} e=({}) f=({})",
            self.n,
            list(&self.e),
            list(&self.f)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompDoc {
    pub poly: String,
    pub p: u64,
    #[serde(rename = "type")]
    pub ty: TypeDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalFactorDoc {
    pub poly: Option<String>,
    pub p: Option<u64>,
    #[serde(rename = "type")]
    pub ty: TypeDoc,
    pub family: String,
    pub value: RatFuncDoc,
    /// `[(a, b, mult)]` for `∏ (1 - X^a Y^b)^mult`, when the denominator has that shape.
    pub den_factored: Option<Vec<(u32, u32, u32)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuncEqDoc {
    pub poly: Option<String>,
    pub p: Option<u64>,
    #[serde(rename = "type")]
    pub ty: TypeDoc,
    pub symmetry: Option<SymmetryDoc>,
    /// Predicted symmetry where a closed form is known.
    pub expected: Option<SymmetryDoc>,
    pub agree: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffRow {
    pub k: usize,
    /// `p^k`
    pub index: Int,
    pub series: Int,
    pub vsum: Option<Int>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffsDoc {
    pub poly: String,
    pub p: u64,
    #[serde(rename = "type")]
    pub ty: TypeDoc,
    pub rows: Vec<CoeffRow>,
    /// `None` when only one column is available.
    pub agree: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerEntry {
    pub m: u64,
    pub b: Int,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerDoc {
    pub poly: String,
    pub prime_bound: u64,
    pub max_index: u64,
    pub entries: Vec<EulerEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinctnessDoc {
    pub max_m: u32,
    pub reps: usize,
    pub pairs_checked: usize,
    pub collisions: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetDoc {
    pub q: u64,
    pub e: u32,
    pub v: u32,
    pub precision: u32,
    pub count: Int,
    pub formula: Int,
    pub agree: bool,
    pub method: String,
    pub distinctness: Option<DistinctnessDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieCheckDoc {
    pub poly: String,
    pub ell: u32,
    pub rank: usize,
    pub antisymmetry_violations: usize,
    pub jacobi_violations: usize,
    pub center_dim: usize,
    pub center_is_z: bool,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieSigmaDoc {
    pub poly: String,
    /// Rows of `σ`.
    pub sigma: Vec<Vec<Int>>,
    pub symmetric: bool,
    pub unimodular: bool,
    pub intertwines: bool,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieIsoDoc {
    pub poly: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum OutputDoc {
    Decomp(DecompDoc),
    LocalFactor(LocalFactorDoc),
    FuncEq(FuncEqDoc),
    Coeffs(CoeffsDoc),
    Euler(EulerDoc),
    Coset(CosetDoc),
    LieCheck(LieCheckDoc),
    LieSigma(LieSigmaDoc),
    LieIso(LieIsoDoc),
}

impl OutputDoc {
    /// Whether the document reports a check that came out false.
    pub fn is_failure(&self) -> bool {
        match self {
            OutputDoc::FuncEq(d) => d.agree == Some(false),
            OutputDoc::Coeffs(d) => d.agree == Some(false),
            OutputDoc::Coset(d) => {
                !d.agree || d.distinctness.as_ref().is_some_and(|x| x.collisions > 0)
            }
            OutputDoc::LieCheck(d) => !d.passed,
            OutputDoc::LieSigma(d) => !d.passed,
            OutputDoc::LieIso(d) => !d.passed,
            OutputDoc::Decomp(_) | OutputDoc::LocalFactor(_) | OutputDoc::Euler(_) => false,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<OutputDoc> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_text(&mut out).expect("writing to a String");
        out
    }

    fn write_text(&self, w: &mut String) -> fmt::Result {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        match self {
            OutputDoc::Decomp(d) => {
                writeln!(w, "polynomial: {}", d.poly)?;
                writeln!(w, "prime: {}", d.p)?;
                writeln!(w, "decomposition: {}", d.ty)?;
            }
            OutputDoc::LocalFactor(d) => {
                write_origin(w, &d.poly, d.p)?;
                writeln!(w, "type: {}", d.ty)?;
                writeln!(w, "family: {}", d.family)?;
                writeln!(w, "numerator: {}", render_poly(&d.value.num))?;
                writeln!(w, "denominator: {}", render_poly(&d.value.den))?;
                if let Some(fs) = &d.den_factored {
                    writeln!(w, "denominator factored: {}", render_factored(fs))?;
                }
            }
            OutputDoc::FuncEq(d) => {
                write_origin(w, &d.poly, d.p)?;
                writeln!(w, "type: {}", d.ty)?;
                match &d.symmetry {
                    Some(s) => writeln!(w, "W(1/X, 1/Y) = {s} * W(X, Y)")?,
                    None => writeln!(w, "no functional equation with a monomial factor")?,
                }
                if let Some(s) = &d.expected {
                    writeln!(w, "expected: {s}")?;
                }
                if let Some(a) = d.agree {
                    writeln!(w, "agree: {}", yes_no(a))?;
                }
            }
            OutputDoc::Coeffs(d) => {
                writeln!(w, "polynomial: {}", d.poly)?;
                writeln!(w, "prime: {}", d.p)?;
                writeln!(w, "type: {}", d.ty)?;
                writeln!(
                    w,
                    "{:>4} {:>24} {:>28} {:>28}",
                    "k", "p^k", "series", "vsum"
                )?;
                for r in &d.rows {
                    let vsum = r.vsum.as_ref().map_or("n/a".to_string(), Int::to_string);
                    writeln!(
                        w,
                        "{:>4} {:>24} {:>28} {:>28}",
                        r.k, r.index, r.series, vsum
                    )?;
                }
                match d.agree {
                    Some(a) => writeln!(w, "agree: {}", yes_no(a))?,
                    None => writeln!(w, "agree: n/a")?,
                }
            }
            OutputDoc::Euler(d) => {
                writeln!(w, "polynomial: {}", d.poly)?;
                writeln!(w, "primes <= {}, indices <= {}", d.prime_bound, d.max_index)?;
                writeln!(w, "{:>8} {:>24}", "m", "b_m")?;
                for e in &d.entries {
                    writeln!(w, "{:>8} {:>24}", e.m, e.b)?;
                }
            }
            OutputDoc::Coset(d) => {
                writeln!(w, "q={} e={} v={} precision={}", d.q, d.e, d.v, d.precision)?;
                writeln!(w, "count: {} ({})", d.count, d.method)?;
                writeln!(w, "formula: {}", d.formula)?;
                writeln!(w, "agree: {}", yes_no(d.agree))?;
                if let Some(x) = &d.distinctness {
                    writeln!(
                        w,
                        "distinctness (m <= {}): {} reps, {} pairs, {} collisions",
                        x.max_m, x.reps, x.pairs_checked, x.collisions
                    )?;
                }
            }
            OutputDoc::LieCheck(d) => {
                writeln!(w, "polynomial: {} (power {})", d.poly, d.ell)?;
                writeln!(w, "rank: {}", d.rank)?;
                writeln!(w, "antisymmetry violations: {}", d.antisymmetry_violations)?;
                writeln!(w, "jacobi violations: {}", d.jacobi_violations)?;
                writeln!(w, "center dimension: {}", d.center_dim)?;
                writeln!(w, "center spanned by z1, z2: {}", yes_no(d.center_is_z))?;
                writeln!(w, "passed: {}", yes_no(d.passed))?;
            }
            OutputDoc::LieSigma(d) => {
                writeln!(w, "polynomial: {}", d.poly)?;
                writeln!(w, "sigma:")?;
                for row in &d.sigma {
                    let cells: Vec<String> = row.iter().map(|c| format!("{c:>4}")).collect();
                    writeln!(w, "  [{}]", cells.join(" "))?;
                }
                writeln!(w, "symmetric: {}", yes_no(d.symmetric))?;
                writeln!(w, "unimodular: {}", yes_no(d.unimodular))?;
                writeln!(w, "sigma C = C^T sigma: {}", yes_no(d.intertwines))?;
                writeln!(w, "passed: {}", yes_no(d.passed))?;
            }
            OutputDoc::LieIso(d) => {
                writeln!(w, "polynomial: {}", d.poly)?;
                writeln!(w, "isomorphism verified: {}", yes_no(d.passed))?;
            }
        }
        Ok(())
    }
}

fn write_origin(w: &mut String, poly: &Option<String>, p: Option<u64>) -> fmt::Result {
    if let Some(poly) = poly {
        writeln!(w, "polynomial: {poly}")?;
    }
    if let Some(p) = p {
        writeln!(w, "prime: {p}")?;
    }
    Ok(())
}

fn render_monomial(a: u32, b: u32) -> String {
    let part = |v: &str, k: u32| match k {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{k}")),
    };
    let parts: Vec<String> = [part("X", a), part("Y", b)].into_iter().flatten().collect();
    parts.join("*")
}

/// `c X^a Y^b` terms in ascending graded-lex order.
pub fn render_poly(terms: &[TermDoc]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, TermDoc(a, b, c)) in terms.iter().enumerate() {
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, c.as_str()),
        };
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mono = render_monomial(*a, *b);
        match (mono.is_empty(), mag == "1") {
            (true, _) => out.push_str(mag),
            (false, true) => out.push_str(&mono),
            (false, false) => out.push_str(&format!("{mag}*{mono}")),
        }
    }
    out
}

pub fn render_factored(fs: &[(u32, u32, u32)]) -> String {
    if fs.is_empty() {
        return "1".into();
    }
    let parts: Vec<String> = fs
        .iter()
        .map(|&(a, b, k)| {
            let base = format!("(1 - {})", render_monomial(a, b));
            if k == 1 {
                base
            } else {
                format!("{base}^{k}")
            }
        })
        .collect();
    parts.join(" * ")
}
