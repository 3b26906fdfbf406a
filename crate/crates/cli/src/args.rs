use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "isoclus", version, about = "Planar cluster constructions and isoperimetric bound checks")]
pub struct Cli {
    /// Seed for randomized corpora.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Directory for JSON and SVG artifacts.
    #[arg(long, global = true, default_value = ".")]
    pub out: PathBuf,
    /// Also write an SVG drawing where the command produces geometry.
    #[arg(long, global = true)]
    pub svg: bool,
    /// Append CSV rows to this file instead of printing them.
    #[arg(long, global = true)]
    pub csv: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build explicit partitions.
    #[command(subcommand)]
    Construct(Construct),
    /// Evaluate perimeter lower bounds and residuals.
    #[command(subcommand)]
    Bounds(Bounds),
    /// Arc function, polygon stability and torus asymmetry.
    #[command(subcommand)]
    Stability(Stability),
    /// Cheeger constants and N-cluster sandwich bounds.
    #[command(subcommand)]
    Cheeger(Cheeger),
    /// Draw a cluster as SVG.
    Render {
        #[arg(long)]
        cluster: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum Construct {
    /// Equal-area annular surgery of the frame between two concentric squares.
    Surgery {
        /// Side of the inner square.
        #[arg(long)]
        q0: f64,
        /// Side of the outer square.
        #[arg(long)]
        q1: f64,
        #[arg(long)]
        m: usize,
    },
    /// Hexagonal partition with reassembled boundary pieces.
    Reassembly {
        #[arg(long)]
        omega: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Hexagonal competitor inside a cube.
    Competitor {
        #[arg(long)]
        omega: PathBuf,
        #[arg(long)]
        cluster: PathBuf,
        /// Side of the cube Q_l.
        #[arg(long)]
        ql: f64,
        #[command(flatten)]
        center: Center,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mu: f64,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Center {
    /// Cube centre, x coordinate.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub cx: f64,
    /// Cube centre, y coordinate.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub cy: f64,
}

#[derive(Subcommand, Debug)]
pub enum Bounds {
    /// Honeycomb lower bound on a torus or in the plane.
    Hales {
        /// Reference honeycomb on the torus `AxB`.
        #[arg(long, conflicts_with = "cluster")]
        torus: Option<String>,
        #[arg(long)]
        cluster: Option<PathBuf>,
    },
    /// Localized lower bound in an open window.
    Local {
        #[arg(long)]
        cluster: PathBuf,
        #[arg(long)]
        window: PathBuf,
    },
    /// Equidistribution residual in a cube.
    Equi {
        #[arg(long)]
        cluster: PathBuf,
        #[arg(long)]
        omega: PathBuf,
        #[arg(long)]
        ql: f64,
        #[command(flatten)]
        center: Center,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum Stability {
    /// Tabulate the arc function.
    Arc {
        #[arg(long, default_value_t = 0.05)]
        a_max: f64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Chordal inequality on a regular hexagon with bulged sides.
    Chordal {
        /// Six signed bulge areas, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        areas: Vec<f64>,
        /// Use the single-bulge equality form.
        #[arg(long)]
        dido: bool,
    },
    /// Regular n-gon fits on a random corpus.
    Ngon {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0.02)]
        sigma: f64,
        #[arg(long, default_value_t = 1e-2)]
        max_deficit: f64,
    },
    /// Unit-area hexagon inequality on a bulged regular hexagon.
    Hexagon {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        areas: Vec<f64>,
    },
    /// Asymmetry of the honeycomb or of a three-edge perturbation.
    Alpha {
        #[arg(long, default_value = "2x2")]
        torus: String,
        #[arg(long, default_value_t = 0.0)]
        eps: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        angle: f64,
    },
    /// Empirical stability constant over a perturbation family.
    Kappa {
        #[arg(long, default_value = "2x2")]
        torus: String,
        #[arg(long, value_delimiter = ',', default_value = "0.001,0.01,0.05")]
        eps: Vec<f64>,
        #[arg(long, default_value_t = 0.3, allow_hyphen_values = true)]
        angle: f64,
    },
}

#[derive(Subcommand, Debug)]
pub enum Cheeger {
    /// Cheeger constant of a convex polygon.
    Convex {
        #[arg(long)]
        k: PathBuf,
    },
    /// Lower and upper H_N estimates for N = 1..=nmax.
    HnSweep {
        #[arg(long)]
        omega: PathBuf,
        #[arg(long)]
        nmax: usize,
        #[arg(long, default_value_t = 0.0)]
        eps: f64,
        #[arg(long, default_value_t = 1)]
        nmin: usize,
    },
}
