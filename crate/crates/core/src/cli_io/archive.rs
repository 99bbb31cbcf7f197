//! The `STDPAIRS v1` text archive.
//!
//! ```text
//! STDPAIRS v1
//! MONOID
//! 2 2            rows cols, then the matrix row by row
//! 1 2
//! 0 2
//! IDEAL          optional; generators as matrix columns
//! 2 1
//! 4
//! 4
//! COVER 1        number of faces
//! FACE (0) 2     face, number of bases; one base per line
//! 0 0
//! 2 2
//! OVERLAP 1      number of classes
//! CLASS (0) max 2
//! 0 0
//! 2 2
//! ASSOCIATED 1
//! (0)
//! DECOMPOSITION 1
//! 2 1            one matrix per component
//! 2
//! 2
//! END
//! ```
//!
//! Sections appear in this order. Output is canonical: equal objects give
//! byte-identical text.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::covers::Cover;
use crate::decomp::OverlapClass;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::{IntMatrix, IntVector};
use crate::monoid::AffineMonoid;
use crate::polyhedral::FaceIndex;

pub const FORMAT_TAG: &str = "STDPAIRS v1";

/// A loaded archive.
#[derive(Clone, Debug)]
pub enum Archive {
    Monoid(Arc<AffineMonoid>),
    Ideal(MonomialIdeal),
    Cover(Cover),
}

impl Archive {
    pub fn kind(&self) -> &'static str {
        match self {
            Archive::Monoid(_) => "monoid",
            Archive::Ideal(_) => "ideal",
            Archive::Cover(_) => "cover",
        }
    }

    pub fn monoid(&self) -> &Arc<AffineMonoid> {
        match self {
            Archive::Monoid(m) => m,
            Archive::Ideal(i) => i.monoid(),
            Archive::Cover(c) => c.monoid(),
        }
    }
}

fn face_token(f: &FaceIndex) -> String {
    match f {
        FaceIndex::Bottom => "(-1)".to_string(),
        FaceIndex::Face(c) => format!("({})", c.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(",")),
    }
}

fn write_vector(out: &mut String, v: &IntVector) {
    let parts: Vec<String> = v.iter().map(|e| e.to_string()).collect();
    let _ = writeln!(out, "{}", parts.join(" "));
}

fn write_matrix(out: &mut String, m: &IntMatrix) {
    let _ = writeln!(out, "{} {}", m.rows(), m.cols());
    if m.cols() == 0 {
        return;
    }
    for r in m.row_vectors() {
        write_vector(out, &r);
    }
}

fn write_cover_section(out: &mut String, cover: &Cover) {
    let faces: Vec<&FaceIndex> = cover.faces().collect();
    let _ = writeln!(out, "COVER {}", faces.len());
    for f in faces {
        let bases = cover.bases(f).expect("listed face");
        let _ = writeln!(out, "FACE {} {}", face_token(f), bases.len());
        for b in bases {
            write_vector(out, b);
        }
    }
}

fn header(monoid: &AffineMonoid) -> String {
    let mut out = format!("{FORMAT_TAG}\nMONOID\n");
    write_matrix(&mut out, monoid.gens());
    out
}

pub fn monoid_to_string(monoid: &AffineMonoid) -> String {
    let mut out = header(monoid);
    out.push_str("END\n");
    out
}

/// Writes the generators and every cached result.
pub fn ideal_to_string(ideal: &MonomialIdeal) -> String {
    let mut out = header(ideal.monoid());
    out.push_str("IDEAL\n");
    write_matrix(&mut out, &ideal.gens_matrix());
    if let Some(cover) = ideal.cache.cover.get() {
        write_cover_section(&mut out, cover);
    }
    if let Some(classes) = ideal.cache.overlap.get() {
        let _ = writeln!(out, "OVERLAP {}", classes.len());
        for c in classes {
            let flag = if c.is_maximal() { "max" } else { "sub" };
            let _ = writeln!(out, "CLASS {} {} {}", face_token(c.face()), flag, c.len());
            for b in c.bases() {
                write_vector(&mut out, b);
            }
        }
    }
    if let Some(faces) = ideal.cache.associated.get() {
        let _ = writeln!(out, "ASSOCIATED {}", faces.len());
        for f in faces {
            let _ = writeln!(out, "{}", face_token(f));
        }
    }
    if let Some(comps) = ideal.cache.decomposition.get() {
        let _ = writeln!(out, "DECOMPOSITION {}", comps.len());
        for w in comps {
            write_matrix(&mut out, &w.gens_matrix());
        }
    }
    out.push_str("END\n");
    out
}

/// Pairs are written without their anchor and reload anchored to the zero
/// ideal.
pub fn cover_to_string(cover: &Cover) -> String {
    let mut out = header(cover.monoid());
    write_cover_section(&mut out, cover);
    out.push_str("END\n");
    out
}

pub fn to_string(archive: &Archive) -> String {
    match archive {
        Archive::Monoid(m) => monoid_to_string(m),
        Archive::Ideal(i) => ideal_to_string(i),
        Archive::Cover(c) => cover_to_string(c),
    }
}

pub fn save(archive: &Archive, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, to_string(archive))?;
    Ok(())
}

pub fn load(path: impl AsRef<Path>) -> Result<Archive> {
    parse(&std::fs::read_to_string(path)?)
}

/// Nonblank lines with their 1-based line numbers.
struct Lines<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    /// Errors refer to the most recently consumed line (or one past the end).
    fn err(&self, msg: impl Into<String>) -> Error {
        let line = match self.pos {
            0 => 1,
            p if p <= self.lines.len() => self.lines[p - 1].0,
            _ => self.lines.last().map_or(1, |l| l.0 + 1),
        };
        Error::Parse { line, msg: msg.into() }
    }

    fn peek(&self) -> Option<&'a str> {
        self.lines.get(self.pos).map(|l| l.1)
    }

    fn next(&mut self, what: &str) -> Result<&'a str> {
        let line = self.lines.get(self.pos).map(|l| l.1);
        self.pos += 1;
        line.ok_or_else(|| self.err(format!("unexpected end of file in {what}")))
    }

    fn tokens(&mut self, what: &str) -> Result<Vec<&'a str>> {
        Ok(self.next(what)?.split_whitespace().collect())
    }

    fn count(&self, token: &str, what: &str) -> Result<usize> {
        token.parse().map_err(|_| self.err(format!("bad count {token:?} in {what}")))
    }

    fn vector(&mut self, dim: usize, what: &str) -> Result<IntVector> {
        let toks = self.tokens(what)?;
        if toks.len() != dim {
            return Err(self.err(format!("expected {dim} integers in {what}, found {}", toks.len())));
        }
        let entries = toks
            .iter()
            .map(|t| t.parse::<BigInt>().map_err(|_| self.err(format!("bad integer {t:?} in {what}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntVector::new(entries))
    }

    fn matrix(&mut self, what: &str) -> Result<IntMatrix> {
        let toks = self.tokens(what)?;
        if toks.len() != 2 {
            return Err(self.err(format!("expected \"rows cols\" in {what}")));
        }
        let (r, c) = (self.count(toks[0], what)?, self.count(toks[1], what)?);
        if c == 0 {
            return Ok(IntMatrix::zeros(r, 0));
        }
        let rows = (0..r).map(|_| self.vector(c, what)).collect::<Result<Vec<_>>>()?;
        IntMatrix::from_row_vectors(&rows, c)
    }

    fn face(&self, token: &str, what: &str) -> Result<FaceIndex> {
        token.parse().map_err(|_| self.err(format!("bad face {token:?} in {what}")))
    }

    /// `KEYWORD n` header; returns `n`.
    fn section(&mut self, keyword: &str) -> Result<usize> {
        let toks = self.tokens(keyword)?;
        if toks.len() != 2 || toks[0] != keyword {
            return Err(self.err(format!("malformed {keyword} header")));
        }
        self.count(toks[1], keyword)
    }

    fn at(&self, keyword: &str) -> bool {
        self.peek().is_some_and(|l| l.split_whitespace().next() == Some(keyword))
    }
}

fn parse_cover(lines: &mut Lines<'_>, cover: &mut Cover) -> Result<()> {
    let monoid = cover.monoid().clone();
    let faces = lines.section("COVER")?;
    for _ in 0..faces {
        let toks = lines.tokens("COVER")?;
        if toks.len() != 3 || toks[0] != "FACE" {
            return Err(lines.err("expected \"FACE <face> <count>\" in COVER"));
        }
        let f = lines.face(toks[1], "COVER")?;
        if !monoid.lattice().contains(&f) || f.is_bottom() {
            return Err(lines.err(format!("{f} is not a face of the monoid")));
        }
        for _ in 0..lines.count(toks[2], "COVER")? {
            let b = lines.vector(monoid.dim(), "COVER")?;
            cover.insert(b, f.clone());
        }
    }
    Ok(())
}

/// Parses archive text.
pub fn parse(text: &str) -> Result<Archive> {
    let numbered = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let mut lines = Lines { lines: numbered.collect(), pos: 0 };
    let tag = lines.next("header")?;
    if tag != FORMAT_TAG {
        return Err(Error::Version(tag.to_string()));
    }
    if lines.next("MONOID")? != "MONOID" {
        return Err(lines.err("expected MONOID section"));
    }
    let gens = lines.matrix("MONOID")?;
    let monoid = Arc::new(AffineMonoid::new(gens)?);

    let result = if lines.at("IDEAL") {
        lines.next("IDEAL")?;
        let m = lines.matrix("IDEAL")?;
        let ideal = MonomialIdeal::new(monoid.clone(), &m)?;
        if lines.at("COVER") {
            let mut cover = Cover::for_ideal(&ideal);
            parse_cover(&mut lines, &mut cover)?;
            let _ = ideal.cache.cover.set(cover);
        }
        if lines.at("OVERLAP") {
            let n = lines.section("OVERLAP")?;
            let mut classes = Vec::with_capacity(n);
            for _ in 0..n {
                let toks = lines.tokens("OVERLAP")?;
                if toks.len() != 4 || toks[0] != "CLASS" || !matches!(toks[2], "max" | "sub") {
                    return Err(lines.err("expected \"CLASS <face> max|sub <count>\" in OVERLAP"));
                }
                let f = lines.face(toks[1], "OVERLAP")?;
                let k = lines.count(toks[3], "OVERLAP")?;
                let bases = (0..k).map(|_| lines.vector(monoid.dim(), "OVERLAP")).collect::<Result<Vec<_>>>()?;
                classes.push(OverlapClass::from_parts(f, bases, toks[2] == "max"));
            }
            let _ = ideal.cache.overlap.set(classes);
        }
        if lines.at("ASSOCIATED") {
            let n = lines.section("ASSOCIATED")?;
            let faces = (0..n)
                .map(|_| {
                    let t = lines.next("ASSOCIATED")?;
                    lines.face(t, "ASSOCIATED")
                })
                .collect::<Result<Vec<_>>>()?;
            let _ = ideal.cache.associated.set(faces);
        }
        if lines.at("DECOMPOSITION") {
            let n = lines.section("DECOMPOSITION")?;
            let comps = (0..n)
                .map(|_| {
                    let m = lines.matrix("DECOMPOSITION")?;
                    MonomialIdeal::new(monoid.clone(), &m)
                })
                .collect::<Result<Vec<_>>>()?;
            let _ = ideal.cache.decomposition.set(comps);
        }
        Archive::Ideal(ideal)
    } else if lines.at("COVER") {
        let mut cover = Cover::new(monoid.clone());
        parse_cover(&mut lines, &mut cover)?;
        Archive::Cover(cover)
    } else {
        Archive::Monoid(monoid)
    };

    match lines.peek() {
        Some("END") => lines.pos += 1,
        Some(other) => {
            lines.pos += 1;
            return Err(lines.err(format!("unexpected line {other:?}")));
        }
        None => {
            lines.pos += 1;
            return Err(lines.err("missing END"));
        }
    }
    if let Some(extra) = lines.peek() {
        lines.pos += 1;
        return Err(lines.err(format!("trailing content {extra:?} after END")));
    }
    Ok(result)
}

/// Recomputes every cached result of a loaded ideal and compares.
pub fn verify(archive: &Archive) -> Result<()> {
    let Archive::Ideal(ideal) = archive else { return Ok(()) };
    let fresh = MonomialIdeal::new(ideal.monoid().clone(), &ideal.gens_matrix())?;
    let mismatch = |what: &str| Err(Error::domain(format!("stored {what} does not match a recomputation")));
    if let Some(c) = ideal.cache.cover.get() {
        if c != fresh.standard_cover()? {
            return mismatch("cover");
        }
    }
    if let Some(o) = ideal.cache.overlap.get() {
        if o != fresh.overlap_classes()? {
            return mismatch("overlap classes");
        }
    }
    if let Some(a) = ideal.cache.associated.get() {
        if a != fresh.associated_faces()? {
            return mismatch("associated primes");
        }
    }
    if let Some(d) = ideal.cache.decomposition.get() {
        let recomputed = fresh.irreducible_decomposition()?;
        if d.len() != recomputed.len() || !d.iter().all(|w| recomputed.contains(w)) {
            return mismatch("decomposition");
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Arc<AffineMonoid> {
        Arc::new(AffineMonoid::from_rows(&[[1, 2], [0, 2]]).unwrap())
    }

    #[test]
    fn monoid_round_trip() {
        let q = q();
        let text = monoid_to_string(&q);
        assert_eq!(text, "STDPAIRS v1\nMONOID\n2 2\n1 2\n0 2\nEND\n");
        let Archive::Monoid(back) = parse(&text).unwrap() else { panic!("wrong kind") };
        assert_eq!(*back, *q);
    }

    #[test]
    fn ideal_round_trip_keeps_caches() {
        let i = MonomialIdeal::from_rows(q(), &[[4, 4]]).unwrap();
        i.irreducible_decomposition().unwrap();
        let text = ideal_to_string(&i);
        let Archive::Ideal(back) = parse(&text).unwrap() else { panic!("wrong kind") };
        assert_eq!(back, i);
        assert!(back.has_cached_cover() && back.has_cached_decomposition());
        assert_eq!(ideal_to_string(&back), text);
        verify(&Archive::Ideal(back)).unwrap();
    }

    #[test]
    fn empty_cover_round_trip() {
        let c = Cover::new(q());
        let text = cover_to_string(&c);
        assert!(text.contains("COVER 0"));
        let Archive::Cover(back) = parse(&text).unwrap() else { panic!("wrong kind") };
        assert!(back.is_empty());
    }

    #[test]
    fn zero_ideal_round_trip() {
        let e = MonomialIdeal::empty(q());
        e.irreducible_decomposition().unwrap();
        let text = ideal_to_string(&e);
        let Archive::Ideal(back) = parse(&text).unwrap() else { panic!("wrong kind") };
        assert!(back.is_empty());
        assert_eq!(ideal_to_string(&back), text);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(parse("STDPAIRS v2\nMONOID\n"), Err(Error::Version(_))));
        match parse("STDPAIRS v1\nMONOID\n2 2\n1 2\n") {
            Err(Error::Parse { line, msg }) => {
                assert_eq!(line, 5);
                assert!(msg.contains("MONOID"), "{msg}");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse("STDPAIRS v1\nMONOID\n1 2\n1 x\nEND\n"), Err(Error::Parse { line: 4, .. })));
    }

    #[test]
    fn tampered_cache_fails_verification() {
        let i = MonomialIdeal::from_rows(q(), &[[4, 4]]).unwrap();
        i.standard_cover().unwrap();
        let text = ideal_to_string(&i).replace("2 2\nEND", "3 2\nEND");
        let archive = parse(&text).unwrap();
        assert!(verify(&archive).is_err());
    }
}
