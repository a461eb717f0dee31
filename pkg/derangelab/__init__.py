# -*- coding: utf-8 -*-

__version__ = "0.1.0.dev1"

from .errors import (DerangeLabError, UsageError, BudgetExceeded, DomainError,
                     ConsistencyError)
from .budget import Budgets, DEFAULT_BUDGETS
from .words import format_word, parse_word
from .permutation import (Permutation, StatReport, stats, is_derangement,
                          enumerate_sn, enumerate_derangements,
                          enumerate_with_fixed, stirling_first)
from .biderangement import (Biderangement, word_stats,
                            enumerate_biderangements)
from .sef import (SubexcedantFunction, SefProfile, sef_to_perm, perm_to_sef,
                  perm_to_sef_steps, profile, is_derangement_sef,
                  enumerate_sef, enumerate_derangement_sef)
from .psi import (CaseKind, CaseLabel, PsiTrace, is_matchless, matchless_word,
                  matchless_perm, psi, psi_hat, case_transition_census)
from .involutions import (iota, is_critical, pi_E, flip, zeta, kappa,
                          is_decisive, decisive_from_T, beta)
from .polynomial import Monomial, Polynomial
from .identities import (VerificationResult, main_theorem_values,
                         main_theorem_indices, mr_counting, exc_sum_sn,
                         exc_sum_fixed, derangement_exc_mono, rlm_sum_sn,
                         rlm_derangement_sum, biderangement_identity)
from .probes import (type_restricted_sum, single_cycle_census,
                     rlm_derangement_table, fixed_rlm_probe)
from .configsource import (ConfigSource, DictSource, Defaults, INIFile,
                           YAMLFile, Environment, Commandline)
from .settings import LayeredSettings
from .config import RunConfig, load_run_config
