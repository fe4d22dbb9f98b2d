"""
Módulo de configurações centralizadas do kit de lógicas relacionais.

Carrega e disponibiliza todas as variáveis de ambiente e limites de
busca do sistema em um único local, facilitando a manutenção e
evitando números mágicos espalhados pelos algoritmos.
"""
import os
from zoneinfo import ZoneInfo
from dotenv import load_dotenv

# Carregar variáveis de ambiente do arquivo .env
load_dotenv()

# === Configurações da Aplicação ===
APP_NAME = os.getenv("APP_NAME", "Kit de Lógicas Relacionais")
VERSION = "1.0.0"

# === Configurações de Logging ===
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_RETENTION_DAYS = int(os.getenv("LOG_RETENTION_DAYS", "30"))
LOG_DIR = os.getenv("LOG_DIR", "logs")

# === Configurações de Timezone ===
TIMEZONE = os.getenv("TIMEZONE", "America/Sao_Paulo")
APP_TIMEZONE = ZoneInfo(TIMEZONE)

# === Símbolos Reservados ===
# Nome da relação unária usada nas D-extensões
RELACAO_D = os.getenv("RELACAO_D", "D")

# === Limites de Decomposição ===
TREEWIDTH_CAP = int(os.getenv("TREEWIDTH_CAP", "8"))

# === Limites de Tipos MSO ===
# Tamanho de domínio de referência no rank 2; outras combinações de
# rank e domínio são aceitas enquanto o custo não ultrapassar este.
MSO_TYPE_DOMAIN_CAP = int(os.getenv("MSO_TYPE_DOMAIN_CAP", "6"))
MSO_TYPE_RANK_CAP = int(os.getenv("MSO_TYPE_RANK_CAP", "2"))
MAX_TIPOS_DESCOBERTOS = int(os.getenv("MAX_TIPOS_DESCOBERTOS", "512"))

# === Limites de Busca SLR ===
SLR_DEPTH_CAP = int(os.getenv("SLR_DEPTH_CAP", "400"))
D_EXTENSION_FRESH = int(os.getenv("D_EXTENSION_FRESH", "2"))

# === Avaliação de Segunda Ordem ===
# Número máximo de relações candidatas enumeradas por força bruta
# antes de delegar o quantificador ao solver
SO_BRUTE_FORCE_LIMIT = int(os.getenv("SO_BRUTE_FORCE_LIMIT", "4096"))
SO_SOLVER_TIMEOUT_MS = int(os.getenv("SO_SOLVER_TIMEOUT_MS", "60000"))

# === Suíte de Aceitação ===
SUITE_WORKERS = int(os.getenv("SUITE_WORKERS", "4"))
SUITE_SEED = int(os.getenv("SUITE_SEED", "2024"))
