use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "hankel-exact",
    version,
    about = "Closed-form Hankel transforms of reciprocal gamma-product integrands"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one transform by closed form and/or quadrature.
    Eval(EvalArgs),
    /// Print the even Maclaurin coefficients of the reciprocal gamma product.
    Coeffs(CoeffsArgs),
    /// Compare closed form and quadrature over a range of lambda (CSV by default).
    Sweep(SweepArgs),
    /// Check the 1/pi identities numerically.
    PiIdentity(PiIdentityArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    /// x^(2m+1) prefactor, paired with even Bessel orders
    Odd,
    /// x^(2m) prefactor, paired with odd Bessel orders
    Even,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Quad,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    OddOrder,
    EvenOrder,
    Both,
}

/// Integrand x^(2m+1) or x^(2m) over ∏ Γ(α+βx)Γ(α−βx).
#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long, default_value_t = 0)]
    pub m: u32,
    /// Parity of the power prefactor
    #[arg(long, value_enum, default_value_t = ParityArg::Even)]
    pub parity: ParityArg,
    /// Comma-separated α list
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "1",
        allow_negative_numbers = true
    )]
    pub alpha: Vec<f64>,
    /// Comma-separated β list
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "1",
        allow_negative_numbers = true
    )]
    pub beta: Vec<f64>,
}

/// Bessel order, either directly or through l (ν = 2l or 2l+1 by parity).
#[derive(Debug, Clone, Args)]
pub struct OrderArgs {
    #[arg(long, conflicts_with = "nu")]
    pub l: Option<u32>,
    #[arg(long)]
    pub nu: Option<u32>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[command(flatten)]
    pub order: OrderArgs,
    /// Number, "pi", or "pi*<rational>"
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: String,
    #[arg(long, value_enum, default_value_t = Method::Closed)]
    pub method: Method,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Highest even-power index S
    #[arg(long, default_value_t = 4)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[command(flatten)]
    pub order: OrderArgs,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda_min: String,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda_max: String,
    /// Number of sample points, endpoints included
    #[arg(long, default_value_t = 12)]
    pub steps: usize,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct PiIdentityArgs {
    #[arg(long, default_value_t = 0)]
    pub m: u32,
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: String,
    #[arg(long, value_enum, default_value_t = VariantArg::Both)]
    pub variant: VariantArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}
