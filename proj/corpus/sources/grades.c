#include <stdio.h>
#define MAX_STUDENTS 50
#define SUBJECTS 3

/* student marks: read, grade, summarize and save */

int count_students(int n)
{
    if (n < 1 || n > MAX_STUDENTS)
        return 0;
    return n;
}

void read_marks(int marks[][SUBJECTS], int n)
{
    int i, j;
    for (i = 0; i < n; i++) {
        printf("Student %d\n", i + 1);
        for (j = 0; j < SUBJECTS; j++) {
            do {
                printf("  mark %d (0-100): ", j + 1);
                scanf("%d", &marks[i][j]);
            } while (marks[i][j] < 0 || marks[i][j] > 100);
        }
    }
}

double average(int row[], int count)
{
    int j, total = 0;
    for (j = 0; j < count; j++)
        total += row[j];
    return (double)total / count;
}

char grade(double avg)
{
    if (avg >= 90)
        return 'A';
    else if (avg >= 75)
        return 'B';
    else if (avg >= 60)
        return 'C';
    else if (avg >= 40)
        return 'D';
    return 'F';
}

void print_report(int marks[][SUBJECTS], int n)
{
    int i, best = 0, passed = 0;
    double avg, best_avg = -1, class_total = 0;
    char g;
    printf("\n%-8s %8s %6s\n", "Student", "Average", "Grade");
    for (i = 0; i < n; i++) {
        avg = average(marks[i], SUBJECTS);
        g = grade(avg);
        printf("%-8d %8.2f %6c\n", i + 1, avg, g);
        class_total += avg;
        if (g != 'F')
            passed++;
        if (avg > best_avg) {
            best_avg = avg;
            best = i;
        }
    }
    printf("Class average: %.2f\n", class_total / n);
    printf("Passed: %d of %d\n", passed, n);
    printf("Top student: %d (%.2f)\n", best + 1, best_avg);
}

int save_report(int marks[][SUBJECTS], int n, const char *path)
{
    FILE *fp = fopen(path, "w");
    int i, j;
    if (fp == NULL)
        return 0;
    for (i = 0; i < n; i++) {
        fprintf(fp, "%d", i + 1);
        for (j = 0; j < SUBJECTS; j++)
            fprintf(fp, ",%d", marks[i][j]);
        fprintf(fp, ",%c\n", grade(average(marks[i], SUBJECTS)));
    }
    fclose(fp);
    return 1;
}

int main()
{
    int marks[MAX_STUDENTS][SUBJECTS];
    int n;
    printf("Number of students: ");
    scanf("%d", &n);
    n = count_students(n);
    if (n == 0) {
        printf("Invalid number of students\n");
        return 1;
    }
    read_marks(marks, n);
    print_report(marks, n);
    if (save_report(marks, n, "grades.csv"))
        printf("Report saved to grades.csv\n");
    else
        printf("Could not write grades.csv\n");
    return 0;
}
