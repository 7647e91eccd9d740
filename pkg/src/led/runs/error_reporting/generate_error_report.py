"""
Module de génération du rapport d'audit d'un run.
Crée un fichier Excel listant les lignes signalées (avertissements et erreurs
du solveur) de chaque table.
"""

import os
from datetime import datetime
from typing import Dict

import pandas as pd

from src.led.runs.output_structure import STATUS_ERROR_PREFIX, STATUS_OK

# Date de création figée: deux runs identiques produisent le même fichier
REPORT_CREATED = datetime(2000, 1, 1)


def _severity(status: str) -> str:
    return "error" if status.startswith(STATUS_ERROR_PREFIX) else "warning"


def generate_error_report(tables: Dict[str, pd.DataFrame], output_path: str) -> bool:
    """
    Génère le rapport d'audit au format Excel.

    Le rapport contient un onglet de résumé puis un onglet par table ayant des
    lignes signalées, coloré selon la sévérité.

    Args:
        tables: Tables du run, par nom de fichier (sans extension)
        output_path: Chemin de sortie du fichier Excel

    Returns:
        True si un rapport a été écrit (au moins une ligne signalée)
    """
    flagged = {
        name: df[df["status"] != STATUS_OK].copy()
        for name, df in sorted(tables.items())
    }
    flagged = {name: df for name, df in flagged.items() if not df.empty}
    if not flagged:
        return False

    directory = os.path.dirname(output_path)
    if directory:
        os.makedirs(directory, exist_ok=True)

    with pd.ExcelWriter(output_path, engine='xlsxwriter') as writer:
        workbook = writer.book
        workbook.set_properties({"created": REPORT_CREATED})

        header_format = workbook.add_format({
            'bold': True,
            'bg_color': '#D8E4BC',
            'border': 1
        })
        total_format = workbook.add_format({
            'bold': True,
            'bg_color': '#E6E6E6',
            'border': 1
        })
        error_format = workbook.add_format({'bg_color': '#FFC7CE'})
        warning_format = workbook.add_format({'bg_color': '#FFEB9C'})

        # Onglet de résumé
        summary_data = []
        for name, df in flagged.items():
            severities = df["status"].map(_severity)
            summary_data.append({
                "Table": name,
                "Lignes": len(tables[name]),
                "Erreurs": int((severities == "error").sum()),
                "Avertissements": int((severities == "warning").sum())
            })
        summary_data.append({
            "Table": "TOTAL",
            "Lignes": sum(len(tables[name]) for name in flagged),
            "Erreurs": sum(row["Erreurs"] for row in summary_data),
            "Avertissements": sum(row["Avertissements"] for row in summary_data)
        })
        summary_df = pd.DataFrame(summary_data)
        summary_df.to_excel(writer, sheet_name="Résumé", index=False)

        summary_sheet = writer.sheets["Résumé"]
        for col_num, column in enumerate(summary_df.columns):
            summary_sheet.write(0, col_num, column, header_format)
            summary_sheet.write(len(summary_df), col_num, summary_df.iloc[-1, col_num], total_format)
        summary_sheet.set_column(0, 0, 40)
        summary_sheet.set_column(1, 3, 15)

        # Un onglet par table signalée
        for name, df in flagged.items():
            report_df = df.copy()
            report_df.insert(0, "Sévérité", report_df["status"].map(_severity))
            report_df = report_df.fillna("")

            # Limite Excel de 31 caractères pour un nom d'onglet
            sheet_name = name[-31:]
            report_df.to_excel(writer, sheet_name=sheet_name, index=False)
            sheet = writer.sheets[sheet_name]

            for col_num, column in enumerate(report_df.columns):
                sheet.write(0, col_num, column, header_format)
            for row_num, severity in enumerate(report_df["Sévérité"]):
                row_format = error_format if severity == "error" else warning_format
                sheet.set_row(row_num + 1, None, row_format)

            for i, column in enumerate(report_df.columns):
                max_len = max(report_df[column].astype(str).map(len).max(), len(str(column))) + 2
                sheet.set_column(i, i, min(max_len, 50))

    return True
