//! Planar fans as SVG, computed exactly and printed with two decimals.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::polyhedral::{Cone, IntVector};

const SIZE: i64 = 512;
const CENTER: i64 = 256;
/// Pixels per unit; the box `[-1,1]^2` spans `[32, 480]`.
const SCALE: i64 = 224;
const LABEL_SCALE: i64 = 244;
const PALETTE: [&str; 10] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac",
];

type Point = (BigRational, BigRational);

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn coords(v: &IntVector) -> Result<Point> {
    match v.entries() {
        [x, y] => Ok((BigRational::from_integer(x.clone()), BigRational::from_integer(y.clone()))),
        _ => Err(Error::Unsupported("SVG output requires dimension 2".into())),
    }
}

/// Where the ray through `v` leaves the box `[-1,1]^2`.
fn box_hit(v: &IntVector) -> Result<Point> {
    let (x, y) = coords(v)?;
    let m = if x.abs() > y.abs() { x.abs() } else { y.abs() };
    if m.is_zero() {
        return Err(Error::DegenerateCone);
    }
    Ok((&x / &m, &y / &m))
}

fn cross(a: &Point, b: &Point) -> BigRational {
    &a.0 * &b.1 - &a.1 * &b.0
}

fn fixed(v: &BigRational) -> String {
    let hundredths: BigInt = (v * q(100)).round().to_integer();
    let sign = if hundredths.is_negative() { "-" } else { "" };
    let a = hundredths.abs();
    let (int, frac) = (&a / 100, &a % 100);
    format!("{sign}{int}.{frac:0>2}")
}

fn pixel(p: &Point, scale: i64) -> (String, String) {
    let x = q(CENTER) + &p.0 * q(scale);
    let y = q(CENTER) - &p.1 * q(scale);
    (fixed(&x), fixed(&y))
}

/// The sector of a full-dimensional planar cone clipped to the unit box, as
/// a counter-clockwise polygon starting at the origin.
fn sector(cone: &Cone) -> Result<Vec<Point>> {
    let rays = cone.rays();
    if rays.len() != 2 {
        return Err(Error::NotFullDimensional);
    }
    let (mut a, mut b) = (box_hit(&rays[0])?, box_hit(&rays[1])?);
    if cross(&a, &b).is_negative() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut corners: Vec<Point> = [[1, 1], [-1, 1], [-1, -1], [1, -1]]
        .iter()
        .filter(|c| cone.contains_relative_interior(&IntVector::from(**c)))
        .map(|c| (q(c[0]), q(c[1])))
        .collect();
    corners.sort_by(|p, r| q(0).cmp(&cross(p, r)));
    let mut out = vec![(q(0), q(0)), a];
    out.extend(corners);
    out.push(b);
    Ok(out)
}

/// Deterministic 512x512 picture of the maximal cones of a planar fan inside
/// `sigma`, one flat fill per cone with labelled rays.
pub fn emit_svg(sigma: &Cone, cones: &[Cone]) -> Result<Vec<u8>> {
    if sigma.ambient_dim() != 2 {
        return Err(Error::Unsupported("SVG output requires dimension 2".into()));
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r##"<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="#ffffff"/>"##);
    let lo = CENTER - SCALE;
    let _ = writeln!(
        out,
        r##"<rect x="{lo}" y="{lo}" width="{w}" height="{w}" fill="none" stroke="#cccccc" stroke-width="1"/>"##,
        w = 2 * SCALE
    );
    for (i, cone) in cones.iter().enumerate() {
        let points: Vec<String> = sector(cone)?
            .iter()
            .map(|p| {
                let (x, y) = pixel(p, SCALE);
                format!("{x},{y}")
            })
            .collect();
        let _ = writeln!(
            out,
            r#"<polygon points="{}" fill="{}" fill-opacity="0.6" stroke="none"/>"#,
            points.join(" "),
            PALETTE[i % PALETTE.len()]
        );
    }
    let mut rays: Vec<IntVector> = cones.iter().flat_map(|c| c.rays().to_vec()).collect();
    rays.sort();
    rays.dedup();
    for r in &rays {
        let hit = box_hit(r)?;
        let (x, y) = pixel(&hit, SCALE);
        let _ = writeln!(
            out,
            r##"<line x1="{CENTER}.00" y1="{CENTER}.00" x2="{x}" y2="{y}" stroke="#222222" stroke-width="1.5"/>"##
        );
        let (lx, ly) = pixel(&hit, LABEL_SCALE);
        let _ = writeln!(
            out,
            r#"<text x="{lx}" y="{ly}" font-family="monospace" font-size="12" text-anchor="middle" dominant-baseline="middle">{r}</text>"#
        );
    }
    let _ = writeln!(out, r##"<circle cx="{CENTER}" cy="{CENTER}" r="2.5" fill="#222222"/>"##);
    out.push_str("</svg>\n");
    Ok(out.into_bytes())
}
