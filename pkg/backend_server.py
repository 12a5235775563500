"""
kflat HTTP Service
FastAPI wrapper running the same commands as the command line
"""

import logging
from datetime import datetime

from fastapi import FastAPI, HTTPException  # type: ignore
from fastapi.middleware.cors import CORSMiddleware  # type: ignore
import uvicorn  # type: ignore

from src import __version__
from src.cli import COMMANDS, run
from src.config import config, get_system_info
from src.utils.reports import STATUS_ERROR, CommandReport, RunRequest

# Configure logging for the service
logging.basicConfig(
    level=getattr(logging, config.LOG_LEVEL.upper(), logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

# Initialize FastAPI app
app = FastAPI(
    title="kflat",
    description="Exact algebra for families of divisors and first-order deformations",
    version=__version__
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


# Root endpoint
@app.get("/")
async def root():
    return {
        "message": "kflat service",
        "status": "running",
        "timestamp": datetime.now().isoformat(),
        "version": __version__,
        "commands": sorted(COMMANDS),
        "endpoints": {
            "health": "/health",
            "run": "/api/run",
            "api_docs": "/docs"
        }
    }


# Health check
@app.get("/health")
async def health_check():
    info = get_system_info()
    return {
        "status": "healthy" if all(info["config_status"].values()) else "degraded",
        "timestamp": datetime.now().isoformat(),
        "config_status": info["config_status"],
    }


@app.post("/api/run", response_model=CommandReport)
def run_command(request: RunRequest):
    if request.command not in COMMANDS:
        raise HTTPException(status_code=404, detail=f"unknown command '{request.command}'")
    try:
        report = run([request.command] + request.args)
    except Exception as e:
        logger.error(f"command {request.command} crashed: {e}")
        raise HTTPException(status_code=500, detail="Internal error while running the command")
    if report.status == STATUS_ERROR:
        raise HTTPException(status_code=400, detail=report.model_dump())
    return report


if __name__ == "__main__":
    uvicorn.run(
        "backend_server:app",
        host=config.HOST,
        port=config.PORT,
        log_level=config.LOG_LEVEL.lower()
    )
