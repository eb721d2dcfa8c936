"""Orchestrator package - Contains the analysis pipeline."""

from src.orchestrator.executor import Pipeline, PipelineConfig, PipelineResult, Stage

__all__ = ['Pipeline', 'PipelineConfig', 'PipelineResult', 'Stage']
