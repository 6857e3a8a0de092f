use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "qedvac",
    version,
    about = "Blackbody spectra, QED running coupling, Landau pole and the oscillator vacuum model"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Constants fixture (default: $QEDVAC_CONSTANTS, then the bundled CODATA 2018 file)
    #[arg(long, global = true, value_name = "PATH")]
    pub constants: Option<PathBuf>,

    /// Particle table overriding the bundled sets
    #[arg(long, global = true, value_name = "PATH")]
    pub particles: Option<PathBuf>,

    /// Bundled particle set: SM-with-W or SM-fermions
    #[arg(long, global = true, value_name = "LABEL")]
    pub set: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Suppress the version header line
    #[arg(long, global = true)]
    pub no_banner: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Consistent,
    PaperLiteral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Show {
    Eps0,
    Mu0,
    C,
    Alpha,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Model,
    SauterBohr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Law {
    Rj,
    Planck1,
    Planck2,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One-loop running of α with the momentum transfer
    Running {
        /// Spacelike momentum transfer, e.g. 100GeV/c, 0GeV, 5e15m^-1
        #[arg(
            long,
            value_name = "VALUE<UNIT>",
            conflicts_with = "sweep",
            required_unless_present = "sweep"
        )]
        k: Option<String>,

        /// start:stop:points,log|lin with units on start and stop
        #[arg(long, value_name = "SPEC")]
        sweep: Option<String>,

        #[arg(long, value_enum, default_value_t = Mode::Consistent)]
        mode: Mode,
    },

    /// Landau pole of the chosen particle set
    Landau {
        #[arg(long, value_enum, default_value_t = Mode::Consistent)]
        mode: Mode,

        /// Also evaluate the Zel'dovich form for this many unit-charge types
        /// with the Landau pole at the Planck momentum
        #[arg(long, value_name = "NU")]
        planck_nu: Option<u32>,
    },

    /// Oscillator model of the vacuum: ε₀, μ₀, c and α⁻¹
    Vacuum {
        /// Volume-per-pair prescription, 1..5
        #[arg(long, default_value_t = 4)]
        option: u8,

        #[arg(long, value_enum, default_value_t = Show::All)]
        show: Show,
    },

    /// Infer Σ(q/e)² from α⁻¹ under volume options 4 and 5
    SumCharges {
        /// Defaults to the fixture's alpha_inverse_exp
        #[arg(long, value_name = "VALUE")]
        alpha_inverse: Option<f64>,

        /// Comma-separated volume options
        #[arg(long, value_name = "LIST", default_value = "4,5")]
        options: String,
    },

    /// Limiting electric field for pair creation
    Schwinger {
        #[arg(long, default_value = "e-")]
        particle: String,

        #[arg(long, value_enum, default_value_t = Variant::Model)]
        variant: Variant,

        /// Include the equivalent plane-wave intensity
        #[arg(long)]
        intensity: bool,
    },

    /// Pair-creation probability summed over Compton cells of a focal volume
    Focal {
        /// Focal volume, e.g. 1um3 or 1e-18m3
        #[arg(long, value_name = "VALUE<UNIT>")]
        volume: String,

        /// Per-cell pair-creation probability in [0, 1]
        #[arg(long, value_name = "P")]
        p: f64,

        #[arg(long, default_value = "e-")]
        particle: String,
    },

    /// Rayleigh–Jeans and Planck spectra
    Blackbody {
        #[arg(long, value_enum, default_value_t = Law::Planck1)]
        law: Law,

        /// Temperature in K
        #[arg(long = "T", value_name = "K")]
        temperature: f64,

        /// Frequency in Hz
        #[arg(long, value_name = "HZ", conflicts_with = "sweep")]
        nu: Option<f64>,

        /// start:stop:points,log|lin in Hz
        #[arg(long, value_name = "SPEC")]
        sweep: Option<String>,

        /// Integrate the density from 0 to --nu-max
        #[arg(long, requires = "nu_max", conflicts_with_all = ["nu", "sweep"])]
        integrate: bool,

        #[arg(long, value_name = "HZ")]
        nu_max: Option<f64>,
    },

    /// List the particle set and its charge sum
    Particles,
}
