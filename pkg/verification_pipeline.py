"""
Verification Pipeline Orchestrator
Main class that coordinates configuration, input files and the math modules
behind each command
"""

from typing import Any, Dict, List, Optional

from src.bridge import (
    StratumKind,
    classify,
    fiber_orbit,
    output_stratum,
    phi67,
    phi67_on_conic,
)
from src.cremona import SwapSet, apply_word, swap_word
from src.moduli import WeightVector, collision_stratum, descendants, stability
from src.serialization import (
    ConfigFile,
    encode_points,
    field_choice_text,
    load_config,
    parse_field_choice,
    plane_config_file,
)
from src.utils import LoggerManager, get_config_loader, get_logger
from src.utils.logger import DEFAULT_FORMAT
from src.utils.exceptions import InvalidConfiguration, ParseError
from src.verification import Report, TrialPlan, census_summary, run_suite

logger = get_logger(__name__)


class VerificationPipeline:
    """
    Runs the commands of the engine against configuration files and settings
    """

    def __init__(self, config_dir: str = None, log_level: str = None):
        """
        Initialize the pipeline

        Args:
            config_dir: Path to configuration directory
            log_level: Overrides the environment and settings log level
        """
        self.config_loader = get_config_loader(config_dir)
        self.settings = self.config_loader.get_settings()

        logging_config = self.settings.get("logging", {})
        LoggerManager.configure_logger(
            log_file=logging_config.get("log_file"),
            level=log_level or self.config_loader.log_level(),
            fmt=logging_config.get("format") or DEFAULT_FORMAT,
        )
        self.logger = logger

        verification = self.settings.get("verification", {})
        self.trials = int(verification.get("trials", 200))
        self.seed = int(verification.get("seed", 42))
        self.field = parse_field_choice(str(verification.get("field", "prime:2147483647")))
        self.height = int(verification.get("height", 10_000))
        self.max_retries = int(verification.get("max_retries", 10_000))
        self.workers = int(verification.get("workers", 1))
        self.progress = bool(verification.get("progress", True))
        self.indent = int(self.settings.get("output", {}).get("indent", 2))

        self.logger.debug("Verification pipeline initialized")

    def _plane_input(self, path: str) -> ConfigFile:
        cfg = load_config(path)
        if cfg.plane_config is None:
            if cfg.raw_points is not None:
                raise InvalidConfiguration(f"{path}: plane points are not pairwise distinct")
            raise ParseError("A plane configuration is required", path="plane_config")
        return cfg

    def classify(self, path: str) -> Dict[str, Any]:
        cfg = self._plane_input(path).plane_config
        result = classify(cfg)
        self.logger.info(f"{path}: {result}")
        return result.to_dict()

    def phi(self, path: str) -> Dict[str, Any]:
        """
        phi67 of a configuration file, or its on-conic variant

        Returns:
            Projected points and merged stratum; OnConic inputs report the
            six weight-2 points and their stability instead
        """
        cfg = self._plane_input(path).plane_config
        stratum = classify(cfg)
        if stratum.kind is StratumKind.ON_CONIC:
            projected = phi67_on_conic(cfg)
            return {
                "stratum": stratum.to_dict(),
                "points": encode_points(projected.points),
                "weights": list(projected.weights),
                "merged": str(collision_stratum(projected).merged),
                "stability": stability(projected).value,
            }
        out = phi67(cfg)
        return {
            "stratum": stratum.to_dict(),
            "ordered": encode_points(out.ordered),
            "pair": encode_points(out.pair),
            "merged": str(output_stratum(out)),
        }

    def fiber(self, path: str) -> Dict[str, Any]:
        cfg = self._plane_input(path).plane_config
        orbit = fiber_orbit(cfg)
        self.logger.info(f"Fiber of {path} has {len(orbit)} classes")
        return {
            "size": len(orbit),
            "members": [plane_config_file(member).to_dict()["plane_config"] for member in orbit],
        }

    def swap(self, members: List[int], path: Optional[str] = None) -> Dict[str, Any]:
        """Generator word of a swap set, applied to a configuration when given"""
        swap = SwapSet(frozenset(members))
        word = swap_word(swap)
        result: Dict[str, Any] = {"swap": str(swap), "word": str(word), "length": len(word)}
        if path is not None:
            cfg = self._plane_input(path).plane_config
            result["image"] = plane_config_file(apply_word(cfg, word)).to_dict()
        return result

    def descendants(self, mu: str, points: int) -> Dict[str, Any]:
        weights = WeightVector.parse(mu)
        found = sorted(descendants(weights, points), key=lambda v: v.weights, reverse=True)
        return {
            "mu": str(weights),
            "points": points,
            "count": len(found),
            "descendants": [str(v) for v in found],
        }

    def boundary(self) -> Dict[str, Any]:
        return census_summary()

    def verify(self, suite: str, trials: int = None, seed: int = None, field: str = None) -> Report:
        """
        Run a verification suite

        Args:
            suite: Suite name or "all"
            trials: Trial count (settings default when None)
            seed: Plan seed (settings default when None)
            field: "rational" or "prime:<p>" (settings default when None)

        Returns:
            The suite report
        """
        try:
            plan = TrialPlan(
                suite=suite,
                trials=self.trials if trials is None else trials,
                seed=self.seed if seed is None else seed,
                field=self.field if field is None else parse_field_choice(field),
            )
            self.logger.info(f"Verifying {plan.suite} over {field_choice_text(plan.field)}")
            report = run_suite(plan, workers=self.workers, progress=self.progress,
                               height=self.height, max_retries=self.max_retries)
            if not report.ok:
                self.logger.warning(f"Suite {suite}: {report.failed} failed trials")
            return report

        except Exception as e:
            self.logger.error(f"Error during verification: {e}")
            raise
