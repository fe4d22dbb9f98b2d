from typing import Any, Dict, Optional

from pydantic import BaseModel, Field


class RelatorioDTO(BaseModel):
    """
    Relatório de um verbo, emitido com `--json`.

    Attributes:
        verb: Verbo executado
        verdict: Veredito (None para verbos sem veredito, como `normalize`)
        witnesses: Artefatos impressos no formato textual (SID, estrutura, decomposição...)
        timings: Tempos em segundos por etapa
    """

    verb: str
    verdict: Optional[bool] = None
    witnesses: Dict[str, Any] = Field(default_factory=dict)
    timings: Dict[str, float] = Field(default_factory=dict)

    @property
    def codigo_saida(self) -> int:
        return 1 if self.verdict is False else 0

    def texto(self) -> str:
        """Relatório textual em ordem estável: veredito, depois testemunhas na ordem de inserção."""
        linhas = []
        if self.verdict is not None:
            linhas.append("true" if self.verdict else "false")
        for valor in self.witnesses.values():
            if isinstance(valor, str):
                linhas.append(valor.rstrip("\n"))
            else:
                linhas.append(str(valor))
        return "\n".join(linhas) + ("\n" if linhas else "")
