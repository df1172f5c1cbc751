//! Closed-braid diagrams as SVG 1.1.
//!
//! Strands run top to bottom, one row per letter. At `σ_i` the strand entering at position
//! `i` goes over when the letter is positive; the under strand is drawn with a gap. Closure
//! arcs loop round the right-hand side from the bottom of each position back to its top.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use solenoid_core::BraidWord;

const STEP: i64 = 40;
const MARGIN: i64 = 20;
const STROKE: &str = "#1f3b5c";

struct Layout {
    strands: i64,
    rows: i64,
}

impl Layout {
    fn x(&self, position: i64) -> i64 {
        MARGIN + position * STEP
    }

    /// Height of the closure loop above/below the braid for `position`.
    fn lift(&self, position: i64) -> i64 {
        (self.strands - position) * STEP / 2
    }

    fn top(&self) -> i64 {
        MARGIN + self.lift(0)
    }

    fn y(&self, row: i64) -> i64 {
        self.top() + row * STEP
    }

    fn closure_x(&self, position: i64) -> i64 {
        self.x(self.strands - 1) + (self.strands - position) * STEP
    }

    fn width(&self) -> i64 {
        self.closure_x(0) + MARGIN
    }

    fn height(&self) -> i64 {
        self.y(self.rows) + self.lift(0) + MARGIN
    }
}

/// SVG text for the closure of `b`. Identical input yields identical bytes.
pub fn render(b: &BraidWord) -> String {
    let layout = Layout {
        strands: b.strands() as i64,
        rows: b.len().max(1) as i64,
    };
    let mut body = String::new();
    for (row, l) in b.letters().iter().enumerate() {
        let row = row as i64;
        let left = l.index as i64 - 1;
        for p in 0..layout.strands {
            if p != left && p != left + 1 {
                segment(
                    &mut body,
                    (layout.x(p), layout.y(row)),
                    (layout.x(p), layout.y(row + 1)),
                );
            }
        }
        let (y0, y1) = (layout.y(row), layout.y(row + 1));
        let (xl, xr) = (layout.x(left), layout.x(left + 1));
        // left-to-right diagonal carries the strand entering at the left position
        let down_right = ((xl, y0), (xr, y1));
        let down_left = ((xr, y0), (xl, y1));
        let (over, under) = if l.is_positive() {
            (down_right, down_left)
        } else {
            (down_left, down_right)
        };
        segment(&mut body, over.0, over.1);
        broken_segment(&mut body, under.0, under.1);
    }
    if b.is_empty() {
        for p in 0..layout.strands {
            segment(
                &mut body,
                (layout.x(p), layout.y(0)),
                (layout.x(p), layout.y(1)),
            );
        }
    }
    for p in 0..layout.strands {
        let (x, cx) = (layout.x(p), layout.closure_x(p));
        let (top, bottom) = (layout.y(0), layout.y(layout.rows));
        let h = layout.lift(p);
        writeln!(
            body,
            r#"  <path d="M {x} {bottom} C {x} {b2} {cx} {b2} {cx} {bottom} L {cx} {top} C {cx} {t2} {x} {t2} {x} {top}"/>"#,
            b2 = bottom + h,
            t2 = top - h,
        )
        .unwrap();
    }
    format!(
        concat!(
            r#"<?xml version="1.0" encoding="UTF-8"?>"#,
            "\n",
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
            "\n  <title>{title}</title>\n",
            r#"  <g fill="none" stroke="{stroke}" stroke-width="3" stroke-linecap="round">"#,
            "\n{body}  </g>\n</svg>\n"
        ),
        w = layout.width(),
        h = layout.height(),
        title = title(b),
        stroke = STROKE,
        body = body,
    )
}

pub fn write(b: &BraidWord, out: &Path) -> io::Result<()> {
    std::fs::write(out, render(b))
}

fn title(b: &BraidWord) -> String {
    if b.is_empty() {
        format!("identity on {} strands", b.strands())
    } else {
        format!("{} strands: {}", b.strands(), b.word_string())
    }
}

fn segment(out: &mut String, a: (i64, i64), b: (i64, i64)) {
    writeln!(out, r#"  <path d="M {} {} L {} {}"/>"#, a.0, a.1, b.0, b.1).unwrap();
}

/// Segment with a gap: drawn up to 35% of the way and again from 65%.
fn broken_segment(out: &mut String, a: (i64, i64), b: (i64, i64)) {
    let at = |num: i64| (a.0 + (b.0 - a.0) * num / 100, a.1 + (b.1 - a.1) * num / 100);
    segment(out, a, at(35));
    segment(out, at(65), b);
}
