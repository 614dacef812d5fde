"""
Módulo de configuración del servicio de bases inframonogénicas.

Utiliza `pydantic-settings` para cargar la configuración desde variables
de entorno y/o archivos `.env`. Todos los atributos definidos en `Settings`
pueden sobreescribirse mediante variables de entorno con el prefijo `INFRA_`.

Ejemplo de `.env`:
    INFRA_LOG_LEVEL=INFO
    INFRA_DEFAULT_MAX_DEGREE=8
    INFRA_LEGENDRE_PHASE=hobson
    INFRA_GRAM_WORKERS=4
"""

from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

PhaseName = Literal["hobson", "condon-shortley"]


class Settings(BaseSettings):
    """
    Configuración central del servicio.

    Atributos principales:
        APP_NAME:
            Nombre de la aplicación (aparece en los reportes).
        LOG_LEVEL:
            Nivel del logger raíz configurado por la CLI.
        DEFAULT_MAX_DEGREE:
            Grado máximo usado cuando un comando no recibe `--max-degree`.
        LEGENDRE_PHASE:
            Fase de las funciones asociadas de Legendre usada para construir
            armónicos y elementos de la base ("hobson" no incluye el factor
            (-1)^m de Condon–Shortley).
        TABLE_PHASE:
            Fase con la que se construyen los elementos que se comparan con las
            tablas impresas. Si difiere de la declarada en el archivo de tablas se
            emite una advertencia y las entradas de orden impar dejan de coincidir.
        GRAM_WORKERS:
            Procesos para llenar matrices de Gram (1 = secuencial).
        RANDOM_SEED:
            Semilla de las muestras aleatorias de verificación.
        IDENTITY_SAMPLES:
            Número de pares aleatorios para el arnés de identidades.
        EXPANSION_SAMPLES:
            Número de combinaciones aleatorias para la verificación de la expansión.
        REPORT_DIR:
            Directorio por defecto donde `report` escribe sus archivos.
    """

    APP_NAME: str = "infra_basis_service"
    LOG_LEVEL: str = "WARNING"

    DEFAULT_MAX_DEGREE: int = Field(default=6, ge=0)
    LEGENDRE_PHASE: PhaseName = "hobson"
    TABLE_PHASE: PhaseName = "condon-shortley"

    # Paralelismo de Gram (procesos, no hilos: el cálculo es CPU-bound)
    GRAM_WORKERS: int = Field(default=1, ge=1)

    # Muestras aleatorias
    RANDOM_SEED: int = 20240611
    IDENTITY_SAMPLES: int = Field(default=200, ge=1)
    EXPANSION_SAMPLES: int = Field(default=100, ge=1)

    REPORT_DIR: str = "reports"

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="INFRA_",
        extra="ignore",
    )


# Instancia única de configuración usada en el resto de la app
settings = Settings()
