use isoclus_core::geom::{Ambient, BBox, Cluster, Edge, Region};
use std::f64::consts::PI;
use std::fmt::Write;

fn fmt(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

/// Path data with the y axis flipped so that the drawing is upright.
fn path_data(r: &Region) -> String {
    let mut d = String::new();
    for l in r.loops() {
        let Some(first) = l.edges.first() else { continue };
        let p = first.start();
        let _ = write!(d, "M{} {}", fmt(p.x), fmt(-p.y));
        for e in &l.edges {
            match *e {
                Edge::Segment { to, .. } => {
                    let _ = write!(d, " L{} {}", fmt(to.x), fmt(-to.y));
                }
                Edge::Arc { to, sweep, .. } => {
                    let r = e.radius();
                    let large = u8::from(sweep.abs() > PI);
                    // counterclockwise in the plane is counterclockwise on screen after the flip
                    let flag = u8::from(sweep < 0.0);
                    let _ = write!(d, " A{} {} 0 {large} {flag} {} {}", fmt(r), fmt(r), fmt(to.x), fmt(-to.y));
                }
            }
        }
        d.push_str(" Z");
    }
    d
}

fn view(b: &BBox) -> (f64, f64, f64, f64) {
    let w = b.width().max(1e-9);
    let h = b.height().max(1e-9);
    let mx = 0.05 * w;
    let my = 0.05 * h;
    (b.min.x - mx, -(b.max.y + my), w + 2.0 * mx, h + 2.0 * my)
}

/// One filled path per chamber, coloured by index; the frame is the ambient
/// bounding box plus a 5% margin. On a torus the drawing is clipped to the
/// fundamental domain.
pub fn render_svg(c: &Cluster) -> String {
    let (bbox, domain) = match c.ambient() {
        Ambient::Region(r) => (r.bbox(), None),
        Ambient::Torus(t) => {
            let d = t.domain();
            (d.bbox(), Some(d.bbox()))
        }
        Ambient::Plane => (c.bbox(), None),
    };
    let (x, y, w, h) = view(&bbox);
    let stroke = 0.002 * w.max(h);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="800" height="{}">"#,
        fmt(x),
        fmt(y),
        fmt(w),
        fmt(h),
        (800.0 * h / w).round()
    );
    let mut group = String::from("<g");
    if let Some(d) = domain {
        let _ = writeln!(
            s,
            r#"<defs><clipPath id="domain"><rect x="{}" y="{}" width="{}" height="{}"/></clipPath></defs>"#,
            fmt(d.min.x),
            fmt(-d.max.y),
            fmt(d.width()),
            fmt(d.height())
        );
        group.push_str(r#" clip-path="url(#domain)""#);
    }
    let _ = writeln!(s, r#"{group} stroke="black" stroke-width="{}" fill-rule="evenodd">"#, fmt(stroke));
    let n = c.len().max(1);
    for (i, ch) in c.chambers().iter().enumerate() {
        let hue = 360.0 * i as f64 / n as f64;
        let _ = writeln!(s, r#"<path d="{}" fill="hsl({:.1},70%,70%)"/>"#, path_data(ch), hue);
    }
    s.push_str("</g>\n");
    if let Some(d) = domain {
        let _ = writeln!(
            s,
            r#"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black" stroke-width="{}" stroke-dasharray="{}"/>"#,
            fmt(d.min.x),
            fmt(-d.max.y),
            fmt(d.width()),
            fmt(d.height()),
            fmt(2.0 * stroke),
            fmt(10.0 * stroke)
        );
    }
    s.push_str("</svg>\n");
    s
}
