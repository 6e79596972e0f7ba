use std::fmt;
use std::str::FromStr;

use crate::bethe::{synthesize_on_shell, BetheData, RTable};
use crate::error::{Error, Result};
use crate::numeric::{ParamSet, Scalar};
use crate::random::Draw;

/// A monodromy-matrix entry `T_ij` whose form factor is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Entry {
    E12,
    E23,
    E32,
    E21,
    E13,
}

impl Entry {
    pub const ALL: [Entry; 5] = [Entry::E12, Entry::E23, Entry::E32, Entry::E21, Entry::E13];

    pub fn indices(self) -> (u8, u8) {
        match self {
            Entry::E12 => (1, 2),
            Entry::E23 => (2, 3),
            Entry::E32 => (3, 2),
            Entry::E21 => (2, 1),
            Entry::E13 => (1, 3),
        }
    }

    pub fn from_indices(i: u8, j: u8) -> Result<Entry> {
        Entry::ALL
            .into_iter()
            .find(|e| e.indices() == (i, j))
            .ok_or(Error::UnsupportedEntry(i, j))
    }

    /// `(a' - a, b' - b)`: how the C-side sizes differ from the B-side ones.
    pub fn size_shift(self) -> (isize, isize) {
        let (i, j) = self.indices();
        let d = |p: u8, q: u8| isize::from(p == q);
        (d(i, 1) - d(j, 1), d(j, 3) - d(i, 3))
    }

    /// `(i, j) → (j, i)`
    pub fn transposed(self) -> Result<Entry> {
        let (i, j) = self.indices();
        Entry::from_indices(j, i)
    }

    /// `(i, j) → (4 - j, 4 - i)`
    pub fn reflected(self) -> Entry {
        let (i, j) = self.indices();
        Entry::from_indices(4 - j, 4 - i).expect("reflection stays within the supported entries")
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = self.indices();
        write!(f, "({i},{j})")
    }
}

impl FromStr for Entry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Entry> {
        let t: String = s.chars().filter(|c| !matches!(c, '(' | ')' | ' ')).collect();
        let bad = || Error::Parse(format!("malformed entry `{s}`, expected e.g. `1,2`"));
        let (i, j) = t.split_once(',').ok_or_else(bad)?;
        Entry::from_indices(i.parse().map_err(|_| bad())?, j.parse().map_err(|_| bad())?)
    }
}

/// One form-factor instance `C(ū^C; v̄^C) T_ij(z) B(ū^B; v̄^B)`.
///
/// `r` is the single table of r-values both states live in: the roots of both
/// sides and the free values `r1(z)`, `r3(z)`.
#[derive(Clone, Debug)]
pub struct FFProblem<S: Scalar> {
    pub entry: Entry,
    pub z: S,
    pub cd: BetheData<S>,
    pub bd: BetheData<S>,
    pub r: RTable<S>,
}

impl<S: Scalar> FFProblem<S> {
    /// Merges the two tables and installs `r1(z)`, `r3(z)`. A missing value
    /// falls back to the closed form when there is one and to zero otherwise.
    pub fn new(entry: Entry, z: S, cd: BetheData<S>, bd: BetheData<S>, r1z: Option<S>, r3z: Option<S>) -> Result<Self> {
        let (da, db) = entry.size_shift();
        if cd.a() as isize != bd.a() as isize + da || cd.b() as isize != bd.b() as isize + db {
            return Err(Error::CardinalityMismatch(format!(
                "entry {entry} needs |uC| = |uB| + {da}, |vC| = |vB| + {db}; got C ({}, {}), B ({}, {})",
                cd.a(),
                cd.b(),
                bd.a(),
                bd.b()
            )));
        }
        if !cd.on_shell || !bd.on_shell {
            return Err(Error::OffShell(format!(
                "C on-shell: {}, B on-shell: {}",
                cd.on_shell, bd.on_shell
            )));
        }
        let mut r = cd.r.merged(&bd.r)?;
        let closed = r.has_closed_form();
        match r1z {
            Some(v) => r.override_r1(z.clone(), v),
            None if !closed => r.override_r1(z.clone(), S::zero()),
            None => {}
        }
        match r3z {
            Some(v) => r.override_r3(z.clone(), v),
            None if !closed => r.override_r3(z.clone(), S::zero()),
            None => {}
        }
        Ok(FFProblem { entry, z, cd, bd, r })
    }

    /// A random on-shell instance whose B side has sizes `(a, b)`; all roots
    /// and `z` are jointly generic, `r1(z)`, `r3(z)` are random.
    pub fn random(entry: Entry, a: usize, b: usize, draw: &mut Draw) -> Result<Self> {
        let (da, db) = entry.size_shift();
        let (ac, bc) = (a as isize + da, b as isize + db);
        if ac < 0 || bc < 0 {
            return Err(Error::CardinalityMismatch(format!("entry {entry} needs a larger B side than ({a}, {b})")));
        }
        let (ac, bc) = (ac as usize, bc as usize);
        let mut pts = draw.generic_points::<S>(ac + bc + a + b + 1)?;
        let z = pts.pop().expect("at least one point drawn");
        let mut take = |n: usize, label: &str| ParamSet::new(label, pts.drain(..n).collect());
        let (uc, vc, ub, vb) = (take(ac, "uC")?, take(bc, "vC")?, take(a, "uB")?, take(b, "vB")?);
        let c: S = draw.c();
        let cd = synthesize_on_shell(uc, vc, c.clone(), &[])?;
        let bd = synthesize_on_shell(ub, vb, c, &[])?;
        let rz = draw.values::<S>(2);
        FFProblem::new(entry, z, cd, bd, Some(rz[0].clone()), Some(rz[1].clone()))
    }

    pub fn c(&self) -> &S {
        self.r.c()
    }

    /// `(a, b)`, the sizes of the B-side state.
    pub fn sizes(&self) -> (usize, usize) {
        (self.bd.a(), self.bd.b())
    }

    pub fn r1z(&self) -> Result<S> {
        self.r.r1(&self.z)
    }

    pub fn r3z(&self) -> Result<S> {
        self.r.r3(&self.z)
    }

    /// A copy with `r1(z)` replaced.
    pub fn with_r1z(&self, value: S) -> Self {
        let mut p = self.clone();
        p.r.override_r1(self.z.clone(), value);
        p
    }

    /// A copy with `r3(z)` replaced.
    pub fn with_r3z(&self, value: S) -> Self {
        let mut p = self.clone();
        p.r.override_r3(self.z.clone(), value);
        p
    }

    /// The C-side data seen through the shared table.
    pub(crate) fn c_side(&self) -> BetheData<S> {
        BetheData { r: self.r.clone(), ..self.cd.clone() }
    }

    /// The B-side data seen through the shared table.
    pub(crate) fn b_side(&self) -> BetheData<S> {
        BetheData { r: self.r.clone(), ..self.bd.clone() }
    }
}
