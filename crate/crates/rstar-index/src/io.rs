//! Index file container: a fixed header followed by tagged sections whose
//! payloads are versioned opaque blobs owned by their modules. All integers
//! little-endian; sorted sequences are delta-encoded as LEB128 varints.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::grid::GridPoint;
use crate::index::{PhraseHalf, RStarIndex};
use crate::rlbwt::RunLengthBwt;

pub const MAGIC: [u8; 4] = *b"RSX1";
pub const FORMAT_VERSION: u16 = 1;
const SECTION_VERSION: u16 = 1;

const FLAG_REVERSE_HALF: u8 = 1;

/// Name and payload size of one section, for the stats command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionInfo {
    pub tag: String,
    pub bytes: u64,
}

fn bad(msg: &str) -> Error {
    Error::MalformedIndex(msg.to_string())
}

// ---------- encoding helpers ----------

fn put_u16(out: &mut Vec<u8>, v: u16) {
    out.extend_from_slice(&v.to_le_bytes());
}

fn put_u64(out: &mut Vec<u8>, v: u64) {
    out.extend_from_slice(&v.to_le_bytes());
}

fn put_varint(out: &mut Vec<u8>, mut v: u64) {
    loop {
        let byte = (v & 0x7f) as u8;
        v >>= 7;
        if v == 0 {
            out.push(byte);
            break;
        }
        out.push(byte | 0x80);
    }
}

/// Sorted positions as first value + gaps.
fn put_sorted(out: &mut Vec<u8>, values: &[usize]) {
    put_u64(out, values.len() as u64);
    let mut prev = 0u64;
    for &v in values {
        put_varint(out, v as u64 - prev);
        prev = v as u64;
    }
}

struct Cursor<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(buf: &'a [u8]) -> Self {
        Cursor { buf, pos: 0 }
    }

    fn take(&mut self, k: usize) -> Result<&'a [u8]> {
        if self.pos + k > self.buf.len() {
            return Err(bad("unexpected end of data"));
        }
        let s = &self.buf[self.pos..self.pos + k];
        self.pos += k;
        Ok(s)
    }

    fn u8(&mut self) -> Result<u8> {
        Ok(self.take(1)?[0])
    }

    fn u16(&mut self) -> Result<u16> {
        Ok(u16::from_le_bytes(self.take(2)?.try_into().unwrap()))
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }

    fn varint(&mut self) -> Result<u64> {
        let mut v = 0u64;
        let mut shift = 0;
        loop {
            let byte = self.u8()?;
            if shift >= 64 {
                return Err(bad("varint overflow"));
            }
            v |= ((byte & 0x7f) as u64) << shift;
            if byte & 0x80 == 0 {
                return Ok(v);
            }
            shift += 7;
        }
    }

    fn sorted(&mut self) -> Result<Vec<usize>> {
        let count = self.u64()? as usize;
        if count > self.buf.len() - self.pos {
            // each value takes at least one byte
            return Err(bad("length exceeds payload"));
        }
        let mut out = Vec::with_capacity(count);
        let mut prev = 0u64;
        for _ in 0..count {
            prev = prev
                .checked_add(self.varint()?)
                .ok_or_else(|| bad("position overflow"))?;
            out.push(prev as usize);
        }
        Ok(out)
    }

    fn finished(&self) -> Result<()> {
        if self.pos != self.buf.len() {
            return Err(bad("trailing bytes in section"));
        }
        Ok(())
    }
}

// ---------- section payloads ----------

fn encode_rlbwt(bwt: &RunLengthBwt) -> Vec<u8> {
    let mut out = Vec::new();
    put_u16(&mut out, SECTION_VERSION);
    put_u64(&mut out, bwt.len() as u64);
    put_u64(&mut out, bwt.run_count() as u64);
    out.extend_from_slice(bwt.run_heads());
    let starts = bwt.run_starts();
    for k in 0..starts.len() {
        let end = starts.get(k + 1).copied().unwrap_or(bwt.len() + 1);
        put_varint(&mut out, (end - starts[k]) as u64);
    }
    out
}

fn decode_rlbwt(payload: &[u8]) -> Result<RunLengthBwt> {
    let mut c = Cursor::new(payload);
    if c.u16()? != SECTION_VERSION {
        return Err(bad("unsupported BWT section version"));
    }
    let n = c.u64()? as usize;
    let r = c.u64()? as usize;
    if r == 0 || r > n {
        return Err(bad("bad run count"));
    }
    let heads = c.take(r)?.to_vec();
    let mut starts = Vec::with_capacity(r);
    let mut pos = 1usize;
    for _ in 0..r {
        starts.push(pos);
        let len = c.varint()? as usize;
        if len == 0 {
            return Err(bad("zero-length run"));
        }
        pos = pos.checked_add(len).ok_or_else(|| bad("run overflow"))?;
    }
    if pos != n + 1 {
        return Err(bad("run lengths do not sum to n"));
    }
    c.finished()?;
    RunLengthBwt::from_runs(heads, starts, n)
}

fn encode_marks(marks: &[usize], universe: usize) -> Vec<u8> {
    let mut out = Vec::new();
    put_u16(&mut out, SECTION_VERSION);
    put_u64(&mut out, universe as u64);
    put_sorted(&mut out, marks);
    out
}

fn decode_marks(payload: &[u8]) -> Result<(Vec<usize>, usize)> {
    let mut c = Cursor::new(payload);
    if c.u16()? != SECTION_VERSION {
        return Err(bad("unsupported marks section version"));
    }
    let universe = c.u64()? as usize;
    let marks = c.sorted()?;
    c.finished()?;
    Ok((marks, universe))
}

/// Points sorted by x: x as gaps, then y and satellite raw.
fn encode_points(points: &[GridPoint]) -> Vec<u8> {
    let mut out = Vec::new();
    put_u16(&mut out, SECTION_VERSION);
    put_u64(&mut out, points.len() as u64);
    let mut prev_x = 0u64;
    for p in points {
        put_varint(&mut out, p.x as u64 - prev_x);
        prev_x = p.x as u64;
        put_varint(&mut out, p.y as u64);
        put_varint(&mut out, p.sat as u64);
    }
    out
}

fn decode_points(payload: &[u8]) -> Result<Vec<GridPoint>> {
    let mut c = Cursor::new(payload);
    if c.u16()? != SECTION_VERSION {
        return Err(bad("unsupported grid section version"));
    }
    let count = c.u64()? as usize;
    if count > payload.len() {
        return Err(bad("length exceeds payload"));
    }
    let mut out = Vec::with_capacity(count);
    let mut x = 0u64;
    for _ in 0..count {
        x = x
            .checked_add(c.varint()?)
            .ok_or_else(|| bad("coordinate overflow"))?;
        let y = c.varint()? as usize;
        let sat = c.varint()? as usize;
        out.push(GridPoint {
            x: x as usize,
            y,
            sat,
        });
    }
    c.finished()?;
    Ok(out)
}

fn encode_meta(idx: &RStarIndex) -> Vec<u8> {
    let stats = idx.stats();
    let mut out = Vec::new();
    put_u16(&mut out, SECTION_VERSION);
    put_u64(&mut out, stats.sigma as u64);
    put_u64(&mut out, stats.z as u64);
    put_u64(&mut out, stats.z_rev.unwrap_or(0) as u64);
    out
}

// ---------- container ----------

fn half_sections(half: &PhraseHalf, prefix: char, sections: &mut Vec<([u8; 4], Vec<u8>)>) {
    let tag = |rest: &str| {
        let mut t = [0u8; 4];
        t[0] = prefix as u8;
        t[1..].copy_from_slice(rest.as_bytes());
        t
    };
    sections.push((
        tag("MKP"),
        encode_marks(half.mark_prefix.marks(), half.mark_prefix.universe()),
    ));
    sections.push((
        tag("MKS"),
        encode_marks(half.mark_suffix.marks(), half.mark_suffix.universe()),
    ));
    sections.push((tag("BGD"), encode_points(half.boundary_grid.points())));
    if let Some(src) = &half.source_grid {
        sections.push((tag("SRC"), encode_points(src.points())));
    }
}

pub fn write_index<W: Write>(idx: &RStarIndex, w: &mut W) -> Result<()> {
    let mut sections: Vec<([u8; 4], Vec<u8>)> = Vec::new();
    sections.push((*b"META", encode_meta(idx)));
    sections.push((*b"FBWT", encode_rlbwt(&idx.fwd)));
    sections.push((*b"RBWT", encode_rlbwt(&idx.rev)));
    half_sections(&idx.fwd_half, 'F', &mut sections);
    if let Some(half) = &idx.rev_half {
        half_sections(half, 'V', &mut sections);
    }

    let mut flags = 0u8;
    if idx.rev_half.is_some() {
        flags |= FLAG_REVERSE_HALF;
    }

    w.write_all(&MAGIC)?;
    w.write_all(&FORMAT_VERSION.to_le_bytes())?;
    w.write_all(&(idx.text_len() as u64).to_le_bytes())?;
    w.write_all(&[flags])?;
    w.write_all(&(sections.len() as u32).to_le_bytes())?;
    for (tag, payload) in &sections {
        w.write_all(tag)?;
        w.write_all(&(payload.len() as u64).to_le_bytes())?;
        w.write_all(payload)?;
    }
    Ok(())
}

struct RawFile {
    n: usize,
    flags: u8,
    sections: Vec<(String, Vec<u8>)>,
}

fn read_raw(buf: &[u8]) -> Result<RawFile> {
    let mut c = Cursor::new(buf);
    if c.take(4)? != MAGIC {
        return Err(bad("bad magic bytes"));
    }
    if c.u16()? != FORMAT_VERSION {
        return Err(bad("unsupported format version"));
    }
    let n = c.u64()? as usize;
    let flags = c.u8()?;
    let count = c.u32()? as usize;
    let mut sections = Vec::with_capacity(count);
    for _ in 0..count {
        let tag_bytes = c.take(4)?;
        let tag = std::str::from_utf8(tag_bytes)
            .map_err(|_| bad("non-ASCII section tag"))?
            .to_string();
        let len = c.u64()? as usize;
        let payload = c.take(len)?.to_vec();
        sections.push((tag, payload));
    }
    c.finished()?;
    Ok(RawFile { n, flags, sections })
}

impl RawFile {
    fn section(&self, tag: &str) -> Result<&[u8]> {
        self.sections
            .iter()
            .find(|(t, _)| t == tag)
            .map(|(_, p)| p.as_slice())
            .ok_or_else(|| bad(&format!("missing section {tag}")))
    }
}

fn decode_half(raw: &RawFile, prefix: char, z: usize, source: bool) -> Result<PhraseHalf> {
    let tag = |rest: &str| format!("{prefix}{rest}");
    let (prefix_marks, u1) = decode_marks(raw.section(&tag("MKP"))?)?;
    let (suffix_marks, u2) = decode_marks(raw.section(&tag("MKS"))?)?;
    if u1 != raw.n || u2 != raw.n {
        return Err(bad("mark universe does not match n"));
    }
    let boundary_points = decode_points(raw.section(&tag("BGD"))?)?;
    if boundary_points.len() + 1 != z {
        return Err(bad("boundary count inconsistent with phrase count"));
    }
    let source_points = if source {
        Some(decode_points(raw.section(&tag("SRC"))?)?)
    } else {
        None
    };
    PhraseHalf::from_stored(raw.n, prefix_marks, suffix_marks, boundary_points, source_points, z)
}

pub fn read_index(buf: &[u8]) -> Result<RStarIndex> {
    let raw = read_raw(buf)?;

    let mut meta = Cursor::new(raw.section("META")?);
    if meta.u16()? != SECTION_VERSION {
        return Err(bad("unsupported meta section version"));
    }
    let sigma = meta.u64()? as usize;
    let z = meta.u64()? as usize;
    let z_rev = meta.u64()? as usize;
    meta.finished()?;

    let fwd = decode_rlbwt(raw.section("FBWT")?)?;
    let rev = decode_rlbwt(raw.section("RBWT")?)?;
    if fwd.len() != raw.n || rev.len() != raw.n {
        return Err(bad("BWT length does not match n"));
    }

    let fwd_half = decode_half(&raw, 'F', z, true)?;
    let rev_half = if raw.flags & FLAG_REVERSE_HALF != 0 {
        Some(decode_half(&raw, 'V', z_rev, false)?)
    } else {
        None
    };

    Ok(RStarIndex {
        fwd,
        rev,
        fwd_half,
        rev_half,
        n: raw.n,
        sigma,
    })
}

/// Section names and payload sizes, without building the index.
pub fn read_section_sizes(buf: &[u8]) -> Result<Vec<SectionInfo>> {
    let raw = read_raw(buf)?;
    Ok(raw
        .sections
        .iter()
        .map(|(tag, payload)| SectionInfo {
            tag: tag.clone(),
            bytes: payload.len() as u64,
        })
        .collect())
}

/// Bytes occupied by the header and section table, excluding payloads.
pub fn container_overhead(buf: &[u8]) -> Result<u64> {
    let raw = read_raw(buf)?;
    let payload: u64 = raw.sections.iter().map(|(_, p)| p.len() as u64).sum();
    Ok(buf.len() as u64 - payload)
}

pub fn save_to_path<P: AsRef<Path>>(idx: &RStarIndex, path: P) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_index(idx, &mut w)?;
    w.flush()?;
    Ok(())
}

pub fn load_from_path<P: AsRef<Path>>(path: P) -> Result<RStarIndex> {
    let mut buf = Vec::new();
    BufReader::new(File::open(path)?).read_to_end(&mut buf)?;
    read_index(&buf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::BuildOptions;
    use crate::text::Pattern;

    fn serialize(idx: &RStarIndex) -> Vec<u8> {
        let mut buf = Vec::new();
        write_index(idx, &mut buf).unwrap();
        buf
    }

    #[test]
    fn round_trip_queries_match() {
        let idx = RStarIndex::build(b"abracadabra", BuildOptions::default()).unwrap();
        let loaded = read_index(&serialize(&idx)).unwrap();
        for p in [&b"abra"[..], b"a", b"zz", b"cad"] {
            let pat = Pattern::new(p).unwrap();
            assert_eq!(idx.locate(&pat), loaded.locate(&pat));
            assert_eq!(idx.count(&pat), loaded.count(&pat));
            assert_eq!(idx.leftmost(&pat), loaded.leftmost(&pat));
            assert_eq!(idx.rightmost(&pat).unwrap(), loaded.rightmost(&pat).unwrap());
        }
        assert_eq!(idx.stats(), loaded.stats());
    }

    #[test]
    fn round_trip_without_reverse_half() {
        let idx = RStarIndex::build(
            b"mississippi",
            BuildOptions {
                with_rightmost: false,
            },
        )
        .unwrap();
        let loaded = read_index(&serialize(&idx)).unwrap();
        assert!(!loaded.has_rightmost());
        let pat = Pattern::new(b"ssi").unwrap();
        assert_eq!(idx.locate(&pat), loaded.locate(&pat));
    }

    #[test]
    fn corrupted_magic_rejected() {
        let idx = RStarIndex::build(b"abracadabra", BuildOptions::default()).unwrap();
        let mut buf = serialize(&idx);
        buf[0] = b'X';
        assert!(matches!(read_index(&buf), Err(Error::MalformedIndex(_))));
    }

    #[test]
    fn truncation_rejected() {
        let idx = RStarIndex::build(b"abracadabra", BuildOptions::default()).unwrap();
        let buf = serialize(&idx);
        for cut in [0, 3, 10, buf.len() / 2, buf.len() - 1] {
            assert!(
                matches!(read_index(&buf[..cut]), Err(Error::MalformedIndex(_))),
                "cut at {cut} not rejected"
            );
        }
    }

    #[test]
    fn section_sizes_account_for_file() {
        let idx = RStarIndex::build(b"abracadabra", BuildOptions::default()).unwrap();
        let buf = serialize(&idx);
        let sections = read_section_sizes(&buf).unwrap();
        let total: u64 = sections.iter().map(|s| s.bytes).sum();
        assert_eq!(total + container_overhead(&buf).unwrap(), buf.len() as u64);
    }
}
