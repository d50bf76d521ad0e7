from typing import Dict, List

from pydantic import BaseModel, Field

CACHE_FORMAT_VERSION = 1


class CacheKey(BaseModel):
    type_tag: str = Field(..., description="Cartan type letter")
    rank: int = Field(..., description="Rank of the root system")
    mode: str = Field(..., description="full or targeted character")
    format_version: int = Field(CACHE_FORMAT_VERSION, description="Layout version of the payload")

    def filename(self) -> str:
        return f"{self.type_tag}{self.rank}.{self.mode}.v{self.format_version}.json"


class CharacterTerm(BaseModel):
    weight: List[int] = Field(..., description="Weight coordinates")
    coefficients: List[int] = Field(..., description="Coefficients of q^0, q^1, ...")


class CharacterPayload(BaseModel):
    terms: List[CharacterTerm] = Field(..., description="Stored weights of the character")


class CacheEntry(BaseModel):
    key: CacheKey = Field(..., description="Identity of the cached expansion")
    payload: CharacterPayload = Field(..., description="Serialized graded character")
    checksum: str = Field(..., description="sha256 of the canonical payload JSON")
