"""Tipos de erro compartilhados pelo pacote de configuração de experimentos."""


class ConfigValidationError(ValueError):
    """Erro de validação estrutural ou semântica de configurações e arquivos de problema."""
