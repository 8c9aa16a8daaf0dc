import os
import re
from typing import Dict


class Settings:
    """Configuration de l'application"""

    # Informations de l'artefact
    ARTIFACT_NAME = "mixvol"
    ARTIFACT_DESCRIPTION = (
        "Mixed discriminants, mixed volumes and numerical verification "
        "of the associated inequalities"
    )
    ARTIFACT_VERSION = "1.0.0"

    # Générateur pseudo-aléatoire (graines dérivées par SeedSequence)
    PRNG_NAME = "PCG64"

    # Bornes d'énumération des discriminants mixtes
    MD_PERM_MAX_N = 8
    MD_INCL_EXCL_MAX_N = 20

    # Tolérances
    PSD_RANK_TOL = 1e-9
    PSD_ABS_FLOOR = 1e-12
    THM1_TOL = 1e-8
    THM1_GAP_TOL = 1e-9
    THM1_IDENTITY_TOL = 1e-8
    MD_AGREEMENT_TOL = 1e-9
    EXACT_TOL = 1e-6
    QUAD_TOL = 2e-3
    CONTAINMENT_TOL = 1e-8
    DEGENERACY_TOL = 1e-12

    # Quadrature
    CIRCLE_NODES = 4096
    ICOSPHERE_LEVEL = 4
    DISK_SIDES = 256

    # Harmoniques sphériques
    HARMONICS_LMAX = 16
    HARMONICS_LMAX_CAP = 24

    # Graine fixe du disque englobant minimal
    ENCLOSING_DISK_SEED = 20240501

    # Identifiants de quadrature connus (bornes vérifiées dans services/sphere.py)
    QUADRATURE_PATTERN = re.compile(r"^(icosa[0-6]|gl[0-9]{1,3}|circle[0-9]{1,6})$")

    @property
    def DEFAULT_SEED(self) -> int:
        seed_str = os.getenv("MIXVOL_SEED", "7")
        try:
            return int(seed_str)
        except ValueError:
            raise ValueError(f"Invalid MIXVOL_SEED value: {seed_str}")

    @property
    def DEFAULT_TRIALS(self) -> int:
        trials_str = os.getenv("MIXVOL_TRIALS", "100")
        try:
            trials = int(trials_str)
        except ValueError:
            raise ValueError(f"Invalid MIXVOL_TRIALS value: {trials_str}")
        if trials < 1:
            raise ValueError(f"Invalid MIXVOL_TRIALS value: {trials_str}")
        return trials

    @property
    def DEFAULT_QUADRATURE(self) -> str:
        quad = os.getenv("MIXVOL_QUAD", f"icosa{self.ICOSPHERE_LEVEL}")
        if not self.QUADRATURE_PATTERN.match(quad):
            raise ValueError(f"Invalid MIXVOL_QUAD value: {quad}")
        return quad

    @property
    def WORKERS(self) -> int:
        workers_str = os.getenv("MIXVOL_WORKERS", "1")
        try:
            workers = int(workers_str)
        except ValueError:
            raise ValueError(f"Invalid MIXVOL_WORKERS value: {workers_str}")
        return max(1, workers)

    @property
    def LOG_LEVEL(self) -> str:
        return os.getenv("LOG_LEVEL", "info")

    def tolerances(self) -> Dict[str, float]:
        """Toutes les tolérances, telles qu'embarquées dans les rapports"""
        return {
            "psd_rank": self.PSD_RANK_TOL,
            "psd_abs_floor": self.PSD_ABS_FLOOR,
            "thm1": self.THM1_TOL,
            "thm1_gap": self.THM1_GAP_TOL,
            "thm1_identity": self.THM1_IDENTITY_TOL,
            "md_agreement": self.MD_AGREEMENT_TOL,
            "exact": self.EXACT_TOL,
            "quadrature": self.QUAD_TOL,
            "containment": self.CONTAINMENT_TOL,
        }


# Instance globale des paramètres
settings = Settings()
