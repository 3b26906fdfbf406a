mod args;
mod svg;
mod table;

use anyhow::{anyhow, bail, Context, Result};
use args::{Bounds, Cheeger, Cli, Command, Construct, Stability};
use clap::Parser;
use isoclus_core::bounds::{equidistribution_residual, hales_plane, hales_torus, local_lower_bound};
use isoclus_core::cheeger::{cheeger_convex, h_ratio, hn_sandwich};
use isoclus_core::geom::json::{cluster_from_json, cluster_to_json, region_from_json};
use isoclus_core::geom::{Ambient, Cluster, Point2, Region, Square, TorusSpec};
use isoclus_core::hex::honeycomb;
use isoclus_core::partition::{boundary_reassembly_partition, competitor_build, frame, surgery_partition};
use isoclus_core::stability::{
    alpha_asymmetry, arc, arc_minus_one, bulged_polygon, chordal_check, dido_check, fit_regular_ngon, hexagon_unit_inequality,
    kappa_ratio, ngon_corpus, ngon_variance_bound, regular_ngon, three_edge_perturbation,
};
use std::path::{Path, PathBuf};
use std::time::Instant;
use table::{num, opt, Table};

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_region(path: &Path) -> Result<Region> {
    region_from_json(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn read_cluster(path: &Path) -> Result<Cluster> {
    cluster_from_json(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn parse_torus(s: &str) -> Result<TorusSpec> {
    let (a, b) = s.split_once(['x', 'X']).ok_or_else(|| anyhow!("torus must look like AxB, got {s:?}"))?;
    Ok(TorusSpec::new(a.trim().parse()?, b.trim().parse()?)?)
}

struct Ctx {
    seed: u64,
    out: PathBuf,
    svg: bool,
}

impl Ctx {
    fn write(&self, name: &str, contents: &str) -> Result<()> {
        std::fs::create_dir_all(&self.out).with_context(|| format!("creating {}", self.out.display()))?;
        let p = self.out.join(name);
        std::fs::write(&p, contents).with_context(|| format!("writing {}", p.display()))
    }

    fn artifacts(&self, stem: &str, c: &Cluster) -> Result<()> {
        self.write(&format!("{stem}.json"), &cluster_to_json(c))?;
        if self.svg {
            self.write(&format!("{stem}.svg"), &svg::render_svg(c))?;
        }
        Ok(())
    }

    fn drawing(&self, stem: &str, c: &Cluster) -> Result<()> {
        if self.svg {
            self.write(&format!("{stem}.svg"), &svg::render_svg(c))?;
        }
        Ok(())
    }
}

fn construct(ctx: &Ctx, cmd: Construct) -> Result<Table> {
    let t = Instant::now();
    let mut tab = Table::reports();
    match cmd {
        Construct::Surgery { q0, q1, m } => {
            let q0 = Square::new(Point2::ORIGIN, q0);
            let q1 = Square::new(Point2::ORIGIN, q1);
            let a = frame(&q0, &q1);
            let (c, _, rep) = surgery_partition(&q0, &q1, &a, m)?;
            ctx.artifacts("surgery", &c)?;
            tab.push_report(&rep, m, t.elapsed().as_secs_f64());
        }
        Construct::Reassembly { omega, n } => {
            let omega = read_region(&omega)?;
            let (c, ledger, rep) = boundary_reassembly_partition(&omega, n)?;
            ctx.artifacts("reassembly", &c)?;
            ctx.write("reassembly_ledger.json", &serde_json::to_string(&ledger)?)?;
            tab.push_report(&rep, n, t.elapsed().as_secs_f64());
        }
        Construct::Competitor { omega, cluster, ql, center, n, mu } => {
            let omega = read_region(&omega)?;
            let e = read_cluster(&cluster)?;
            let q = Square::new(Point2::new(center.cx, center.cy), ql);
            let (f, rep) = competitor_build(&omega, &e, &q, n, mu)?;
            ctx.artifacts("competitor", &f)?;
            tab.push_report(&rep, n, t.elapsed().as_secs_f64());
        }
    }
    Ok(tab)
}

fn bounds(cmd: Bounds) -> Result<Table> {
    let t = Instant::now();
    let mut tab = Table::reports();
    match cmd {
        Bounds::Hales { torus, cluster } => {
            let c = match (torus, cluster) {
                (Some(s), None) => honeycomb(parse_torus(&s)?)?,
                (None, Some(p)) => read_cluster(&p)?,
                _ => bail!("give exactly one of --torus or --cluster"),
            };
            let rep = match c.ambient() {
                Ambient::Torus(_) => hales_torus(&c)?,
                _ => hales_plane(&c)?,
            };
            tab.push_report(&rep, c.len(), t.elapsed().as_secs_f64());
        }
        Bounds::Local { cluster, window } => {
            let c = read_cluster(&cluster)?;
            let o = read_region(&window)?;
            let rep = local_lower_bound(&c, &o)?;
            tab.push_report(&rep, c.len(), t.elapsed().as_secs_f64());
        }
        Bounds::Equi { cluster, omega, ql, center, n } => {
            let c = read_cluster(&cluster)?;
            let omega = read_region(&omega)?;
            let q = Square::new(Point2::new(center.cx, center.cy), ql);
            let (_, dia, indeco) = equidistribution_residual(&c, &q, n, &omega)?;
            let wall = t.elapsed().as_secs_f64();
            tab.push_report(&dia, n, wall);
            tab.push_report(&indeco, n, wall);
        }
    }
    Ok(tab)
}

fn unit_hexagon() -> Vec<Point2> {
    regular_ngon(6, 0.0)
}

fn stability(ctx: &Ctx, cmd: Stability) -> Result<Table> {
    let t = Instant::now();
    match cmd {
        Stability::Arc { a_max, samples } => {
            if samples == 0 {
                bail!("need at least one sample");
            }
            let mut tab = Table::new(&["a", "arc", "arc_minus_one", "coercivity_ratio"]);
            for i in 0..=samples {
                let a = a_max * i as f64 / samples as f64;
                let m = arc_minus_one(a)?;
                let ratio = if a > 0.0 { Some(m / (a * a)) } else { None };
                tab.push(vec![num(a), num(arc(a)?), num(m), opt(ratio)]);
            }
            Ok(tab)
        }
        Stability::Chordal { areas, dido } => {
            let v = unit_hexagon();
            let e = bulged_polygon(&v, &areas)?;
            let rep = if dido { dido_check(&e, &v)? } else { chordal_check(&e, &v)? };
            ctx.drawing("chordal", &Cluster::new_unchecked(vec![e], Ambient::Plane))?;
            let mut tab = Table::reports();
            tab.push_report(&rep, 6, t.elapsed().as_secs_f64());
            Ok(tab)
        }
        Stability::Hexagon { areas } => {
            let v = unit_hexagon();
            let e = bulged_polygon(&v, &areas)?;
            let rep = hexagon_unit_inequality(&e, &v)?;
            let mut tab = Table::reports();
            tab.push_report(&rep, 6, t.elapsed().as_secs_f64());
            Ok(tab)
        }
        Stability::Ngon { n, count, sigma, max_deficit } => {
            let corpus = ngon_corpus(n, count, sigma, max_deficit, ctx.seed)?;
            let mut tab = Table::new(&["sample", "n", "deficit", "hd", "ratio", "variance_constant"]);
            for (i, pi) in corpus.iter().enumerate() {
                let fit = fit_regular_ngon(pi, n)?;
                let var = ngon_variance_bound(pi)?;
                tab.push(vec![i.to_string(), n.to_string(), num(fit.deficit), num(fit.hd), opt(fit.ratio), opt(var.fitted_constant)]);
                if i == 0 && ctx.svg {
                    let overlay = Cluster::new_unchecked(vec![Region::polygon(pi)?, Region::polygon(&fit.polygon)?], Ambient::Plane);
                    ctx.drawing("ngon_fit", &overlay)?;
                }
            }
            Ok(tab)
        }
        Stability::Alpha { torus, eps, angle } => {
            let spec = parse_torus(&torus)?;
            let c = if eps == 0.0 { honeycomb(spec)? } else { three_edge_perturbation(spec, eps, angle)? };
            let a = alpha_asymmetry(&c)?;
            ctx.artifacts("alpha", &c)?;
            let mut tab = Table::new(&["torus", "eps", "angle", "alpha", "perimeter", "s", "t"]);
            tab.push(vec![torus, num(eps), num(angle), num(a.alpha), num(c.perimeter(None)?), num(a.s), num(a.t)]);
            Ok(tab)
        }
        Stability::Kappa { torus, eps, angle } => {
            let spec = parse_torus(&torus)?;
            let mut tab = Table::new(&["torus", "eps", "alpha", "perimeter", "kappa_ratio"]);
            let mut best = f64::INFINITY;
            for e in eps {
                let c = three_edge_perturbation(spec, e, angle)?;
                let (ratio, a) = kappa_ratio(&c)?;
                best = best.min(ratio);
                tab.push(vec![torus.clone(), num(e), num(a.alpha), num(c.perimeter(None)?), num(ratio)]);
            }
            tab.push(vec![torus, "min".into(), String::new(), String::new(), num(best)]);
            Ok(tab)
        }
    }
}

fn cheeger(ctx: &Ctx, cmd: Cheeger) -> Result<Table> {
    match cmd {
        Cheeger::Convex { k } => {
            let k = read_region(&k)?;
            let c = cheeger_convex(&k)?;
            ctx.drawing("cheeger", &Cluster::new_unchecked(vec![k.clone(), c.set.clone()], Ambient::Plane))?;
            let mut tab = Table::new(&["h", "r", "area", "perimeter", "set_ratio"]);
            tab.push(vec![num(c.h), num(c.r), num(c.set.area()), num(c.set.perimeter()), num(h_ratio(&c.set)?)]);
            Ok(tab)
        }
        Cheeger::HnSweep { omega, nmax, eps, nmin } => {
            let omega = read_region(&omega)?;
            if nmin == 0 || nmin > nmax {
                bail!("need 1 <= nmin <= nmax");
            }
            let mut tab = Table::new(&["N", "lower", "upper", "delta_N", "k_N", "feasible", "alpha", "raw"]);
            for n in nmin..=nmax {
                let s = hn_sandwich(&omega, n, eps)?;
                tab.push(vec![
                    n.to_string(),
                    num(s.lower),
                    opt(s.upper),
                    opt(s.delta),
                    s.k.map(|k| k.to_string()).unwrap_or_default(),
                    s.feasible().to_string(),
                    opt(s.alpha),
                    opt(s.raw),
                ]);
            }
            Ok(tab)
        }
    }
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("ISOCLUS_THREADS") {
        let n: usize = v.trim().parse().with_context(|| format!("ISOCLUS_THREADS must be a positive integer, got {v:?}"))?;
        if n == 0 {
            bail!("ISOCLUS_THREADS must be a positive integer, got 0");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    configure_threads()?;
    let ctx = Ctx { seed: cli.seed, out: cli.out, svg: cli.svg };
    let tab = match cli.command {
        Command::Construct(c) => construct(&ctx, c)?,
        Command::Bounds(b) => bounds(b)?,
        Command::Stability(s) => stability(&ctx, s)?,
        Command::Cheeger(c) => cheeger(&ctx, c)?,
        Command::Render { cluster } => {
            print!("{}", svg::render_svg(&read_cluster(&cluster)?));
            return Ok(());
        }
    };
    tab.emit(cli.csv.as_deref())
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}
