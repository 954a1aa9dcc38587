//! Command implementations shared by the binary and the test suites.

use qec5::experiment::{self, TomographyOptions};
use qec5::noise::NoiseSchedule;
use qec5::recovery::Pipeline;
use qec5::{ErrorCondition, LogicalGate};

use crate::config::StagesConfig;
use crate::report::{
    advantage_report, baseline_report, codewords_report, experiment_report, sweep_report,
    syndrome_table_report, AdvantageReport, BaselineReport, CodewordsReport, ExperimentReport,
    SweepReport, SyndromeTableReport,
};
use crate::CliResult;

/// Shared run options resolved from the command line.
#[derive(Debug, Clone, Default)]
pub struct RunContext {
    pub noise: Option<NoiseSchedule>,
    pub assume_identity_response: bool,
    pub seed: Option<u64>,
}

impl RunContext {
    fn tomography(&self) -> TomographyOptions {
        TomographyOptions {
            include_identity: !self.assume_identity_response,
        }
    }

    fn noise_echo(&self) -> Option<StagesConfig> {
        self.noise.as_ref().map(StagesConfig::from_schedule)
    }
}

pub fn cmd_codewords(seed: Option<u64>) -> CodewordsReport {
    codewords_report(seed)
}

pub fn cmd_syndrome_table(seed: Option<u64>) -> CliResult<SyndromeTableReport> {
    let pipeline = Pipeline::with_default_frame()?;
    Ok(syndrome_table_report(pipeline.table(), seed))
}

pub fn cmd_run(
    gate: LogicalGate,
    error: ErrorCondition,
    ctx: &RunContext,
) -> CliResult<ExperimentReport> {
    let pipeline = Pipeline::with_default_frame()?;
    let outcome =
        experiment::run_experiment(&pipeline, gate, error, ctx.noise.as_ref(), ctx.tomography())?;
    Ok(experiment_report(
        &outcome,
        ctx.assume_identity_response,
        ctx.noise_echo(),
        ctx.seed,
    ))
}

pub fn cmd_sweep(ctx: &RunContext) -> CliResult<SweepReport> {
    let pipeline = Pipeline::with_default_frame()?;
    let outcome = experiment::sweep(&pipeline, ctx.noise.as_ref(), ctx.tomography())?;
    Ok(sweep_report(
        &outcome,
        ctx.assume_identity_response,
        ctx.noise_echo(),
        ctx.seed,
    ))
}

pub fn cmd_baseline(ctx: &RunContext) -> CliResult<BaselineReport> {
    let mut outcomes = Vec::with_capacity(3);
    for gate in LogicalGate::ALL {
        outcomes.push(experiment::baseline(gate, ctx.tomography())?);
    }
    Ok(baseline_report(&outcomes, ctx.seed))
}

pub fn cmd_advantage(ctx: &RunContext) -> CliResult<AdvantageReport> {
    let pipeline = Pipeline::with_default_frame()?;
    let outcome = experiment::advantage(&pipeline, ctx.noise.as_ref(), ctx.tomography())?;
    Ok(advantage_report(&outcome, ctx.noise_echo(), ctx.seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn run_command_noiseless_is_perfect() {
        let report = cmd_run(
            LogicalGate::Not,
            ErrorCondition::from_label("BS4").unwrap(),
            &RunContext::default(),
        )
        .unwrap();
        assert!((report.experiment.fidelity - 1.0).abs() < 1e-9);
        assert_eq!(report.experiment.syndrome.as_deref(), Some("1110"));
        assert!(!report.identity_response_assumed);
        assert!(report.noise.is_none());
    }

    #[test]
    fn syndrome_table_has_16_rows() {
        let report = cmd_syndrome_table(None).unwrap();
        assert_eq!(report.entries.len(), 16);
        assert_eq!(report.entries[0].syndrome, "0000");
        assert_eq!(report.entries[0].condition, "E");
        assert_eq!(report.entries[0].correction, "I");
    }

    #[test]
    fn baseline_means() {
        let report = cmd_baseline(&RunContext::default()).unwrap();
        for gate in &report.gates {
            assert!((gate.mean - 0.8125).abs() < 1e-12);
        }
    }

    #[test]
    fn assume_identity_flag_propagates() {
        let ctx = RunContext {
            assume_identity_response: true,
            ..RunContext::default()
        };
        let report = cmd_run(LogicalGate::Identity, ErrorCondition::Identity, &ctx).unwrap();
        assert!(report.identity_response_assumed);
        assert_eq!(report.experiment.identity_response_deviation, None);
    }
}
